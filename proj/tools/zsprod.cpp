// zsprod: command-line front end.
//
// Exit codes: 0 success/valid, 1 domain-level invalidity, 2 resource or
// limit exceeded, 3 usage error (bad flags, malformed tuple or input file).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zsprod/arith.hpp"
#include "zsprod/congruence.hpp"
#include "zsprod/error.hpp"
#include "zsprod/fpcoset.hpp"
#include "zsprod/pcgroup.hpp"
#include "zsprod/serialize.hpp"

namespace {

using namespace zsp;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitLimit = 2;
constexpr int kExitUsage = 3;

struct Config {
  unsigned n = 0;
  unsigned m = 0;
  std::optional<unsigned> n1;
  std::optional<unsigned> m1;
  std::string tuple;
  std::string format = "text";
  std::string output;
  std::string table_path;
  std::size_t max_table = TableOptions{}.max_order;
  std::size_t max_cosets = kDefaultMaxCosets;
  unsigned workers = 1;
  bool full = false;
  bool associativity = false;
  std::string preset;
  std::string relators;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::enumeration_too_large:
    case ErrorKind::table_too_large:
    case ErrorKind::coset_limit_exceeded:
      return kExitLimit;
    case ErrorKind::inconsistent_presentation:
    case ErrorKind::incomplete_table:
    case ErrorKind::precondition_violated:
      return kExitInvalid;
    default:
      return kExitUsage;
  }
}

// Rethrows rank problems with the offending flag named.
SdPair pair_from(const Config& cfg) {
  for (auto [flag, v] : {std::pair{"--n", cfg.n}, std::pair{"--m", cfg.m}}) {
    if (v < kMinRank) {
      throw Error(ErrorKind::rank_too_small,
                  std::string(flag) + " must be at least 4 (got " + std::to_string(v) + ")");
    }
    if (v > kDefaultRankCap) {
      throw Error(ErrorKind::rank_too_large, std::string(flag) + " must be at most " +
                                                 std::to_string(kDefaultRankCap) + " (got " +
                                                 std::to_string(v) + ")");
    }
  }
  return derive_pair(cfg.n, cfg.m);
}

std::optional<CoreSpec> cores_from(const Config& cfg, const SdPair& pair) {
  if (!cfg.n1 && !cfg.m1) return std::nullopt;
  CoreSpec c{cfg.n1.value_or(1), cfg.m1.value_or(1)};
  try {
    validate_cores(pair, c);
  } catch (const Error& e) {
    throw Error(ErrorKind::invalid_core_spec,
                std::string("--n1/--m1: ") + e.what());
  }
  return c;
}

std::vector<Residue> tuple_from(const Config& cfg, std::initializer_list<std::size_t> arities) {
  if (cfg.tuple.empty()) throw Error(ErrorKind::parse_error, "--tuple is required");
  auto v = parse_tuple(cfg.tuple);
  for (auto a : arities) {
    if (v.size() == a) return v;
  }
  std::string want;
  for (auto a : arities) want += (want.empty() ? "" : " or ") + std::to_string(a);
  throw Error(ErrorKind::parse_error, "--tuple has " + std::to_string(v.size()) +
                                          " values, expected " + want);
}

TupleA as_a(const SdPair& p, const std::vector<Residue>& v) {
  const auto i = [&](std::size_t k) { return static_cast<std::int64_t>(v[k]); };
  return make_tuple_a(p, i(0), i(1), i(2), i(3));
}

TupleB as_b(const SdPair& p, const std::vector<Residue>& v) {
  const auto i = [&](std::size_t k) { return static_cast<std::int64_t>(v[k]); };
  return make_tuple_b(p, i(0), i(1), i(2), i(3), i(4), i(5));
}

// Output sink: --output path or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::parse_error, "cannot open --output " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// enumerate-a / enumerate-b -------------------------------------------------

using Histogram = std::map<Residue, std::size_t>;

std::string format_histogram(const Histogram& h) {
  std::string s;
  for (const auto& [v, k] : h) {
    if (!s.empty()) s += ", ";
    s += std::to_string(v) + "→" + std::to_string(k);
  }
  return s;
}

Json histogram_json(const Histogram& h) {
  Json j = Json::object();
  for (const auto& [v, k] : h) j[std::to_string(v)] = k;
  return j;
}

template <typename Tuple>
int report_enumeration(const Config& cfg, const SdPair& pair, std::optional<CoreSpec> cores,
                       const std::vector<Tuple>& tuples,
                       const std::vector<std::pair<const char*, Residue Tuple::*>>& fields,
                       const char* csv_header) {
  std::map<std::string, Histogram> hist;
  for (const auto& [name, member] : fields) hist[name];
  for (const auto& t : tuples) {
    for (const auto& [name, member] : fields) ++hist[name][t.*member];
  }
  std::vector<TupleA> projected;
  projected.reserve(tuples.size());
  for (const auto& t : tuples) {
    if constexpr (std::is_same_v<Tuple, TupleA>) {
      projected.push_back(t);
    } else {
      projected.push_back(project(t));
    }
  }
  const bool even = parity_audit(pair, projected);

  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    Json j{{"n", pair.n}, {"m", pair.m}};
    if (cores) j["cores"] = {{"n1", cores->n1}, {"m1", cores->m1}};
    j["count"] = tuples.size();
    Json h = Json::object();
    for (const auto& [name, member] : fields) h[name] = histogram_json(hist[name]);
    j["histograms"] = h;
    j["parity_even"] = even;
    Json list = Json::array();
    for (const auto& t : tuples) list.push_back(to_json(t));
    j["tuples"] = list;
    os << j.dump(2) << '\n';
    return kExitOk;
  }

  std::ostringstream summary;
  summary << tuples.size() << " tuples; s: " << format_histogram(hist["s"]) << '\n';
  for (const auto& [name, member] : fields) {
    if (std::string(name) != "s") summary << "  " << name << ": " << format_histogram(hist[name]) << '\n';
  }
  summary << "  parity (a,s,t,c): " << (even ? "all even" : "NOT all even") << '\n';

  if (cfg.format == "csv") {
    os << csv_header << '\n';
    for (const auto& t : tuples) os << csv_row(t) << '\n';
    std::cerr << summary.str();
  } else {
    for (const auto& t : tuples) os << csv_row(t) << '\n';
    os << summary.str();
  }
  return kExitOk;
}

int cmd_enumerate_a(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto tuples = enumerate_a(pair, {.workers = cfg.workers, .allow_large = cfg.full});
  return report_enumeration<TupleA>(
      cfg, pair, std::nullopt, tuples,
      {{"a", &TupleA::a}, {"s", &TupleA::s}, {"t", &TupleA::t}, {"c", &TupleA::c}},
      kCsvHeaderA);
}

int cmd_enumerate_b(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto cores = cores_from(cfg, pair).value_or(CoreSpec{});
  const auto tuples =
      enumerate_b(pair, cores, {.workers = cfg.workers, .allow_large = cfg.full});
  return report_enumeration<TupleB>(cfg, pair, cores, tuples,
                                    {{"r", &TupleB::r},
                                     {"a", &TupleB::a},
                                     {"s", &TupleB::s},
                                     {"b", &TupleB::b},
                                     {"t", &TupleB::t},
                                     {"c", &TupleB::c}},
                                    kCsvHeaderB);
}

// check-a / check-b --------------------------------------------------------

struct ConditionLine {
  Condition condition;
  bool passed;
  Residue residual;  // for ORD-*: the actual additive order
  Residue expected;  // for ORD-*: the requested order
};

int report_check(const Config& cfg, const SdPair& pair, const Json& tuple_json,
                 const std::vector<ConditionLine>& lines) {
  bool valid = true;
  std::vector<std::string> failed;
  for (const auto& l : lines) {
    if (!l.passed) {
      valid = false;
      failed.emplace_back(to_string(l.condition));
    }
  }
  const auto is_ord = [](Condition c) { return c == Condition::OrdR || c == Condition::OrdB; };
  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    Json conds = Json::array();
    for (const auto& l : lines) {
      Json c{{"name", to_string(l.condition)}, {"passed", l.passed}};
      if (is_ord(l.condition)) {
        c["order"] = l.residual;
        c["expected"] = l.expected;
      } else {
        c["residual"] = l.residual;
      }
      conds.push_back(c);
    }
    os << Json{{"n", pair.n}, {"m", pair.m}, {"tuple", tuple_json},
               {"conditions", conds}, {"valid", valid}, {"failed", failed}}
              .dump(2)
       << '\n';
  } else {
    for (const auto& l : lines) {
      os << to_string(l.condition) << ' ' << (l.passed ? "ok" : "FAIL");
      if (is_ord(l.condition)) {
        os << " (order " << l.residual << ", expected " << l.expected << ')';
      } else if (!l.passed) {
        os << " (residual " << l.residual << ')';
      }
      os << '\n';
    }
    if (valid) {
      os << "valid\n";
    } else {
      os << "invalid: fails";
      for (const auto& f : failed) os << ' ' << f;
      os << '\n';
    }
  }
  return valid ? kExitOk : kExitInvalid;
}

std::vector<ConditionLine> condition_lines(const SdPair& pair, const TupleB& t,
                                           std::initializer_list<Condition> conds) {
  std::vector<ConditionLine> out;
  for (auto c : conds) {
    const auto r = residual(pair, t, c);
    out.push_back({c, r == 0, r, 0});
  }
  return out;
}

int cmd_check_a(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto t = as_a(pair, tuple_from(cfg, {4}));
  using enum Condition;
  auto lines = condition_lines(pair, widen(t), {C1, C2, C3, C4, C5, C6});
  return report_check(cfg, pair, to_json(t), lines);
}

int cmd_check_b(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto cores = cores_from(cfg, pair).value_or(CoreSpec{});
  const auto t = as_b(pair, tuple_from(cfg, {6}));
  using enum Condition;
  auto lines =
      condition_lines(pair, t, {D1, D2, D3, D4, D5, D6, D7, D8, D9, D10, D11, D12});
  const auto ord_r = additive_order(t.r, pair.N);
  const auto ord_b = additive_order(t.b, pair.M);
  lines.push_back({OrdR, ord_r == cores.m1, ord_r, cores.m1});
  lines.push_back({OrdB, ord_b == cores.n1, ord_b, cores.n1});
  return report_check(cfg, pair, to_json(t), lines);
}

// build ---------------------------------------------------------------------

// Validates a 4- or 6-value tuple; on failure prints the verdict to stderr.
std::optional<TupleB> validated_tuple(const Config& cfg, const SdPair& pair,
                                      std::optional<CoreSpec> cores) {
  const auto v = tuple_from(cfg, {4, 6});
  Verdict verdict;
  TupleB t;
  if (v.size() == 4) {
    const auto a = as_a(pair, v);
    verdict = check_a(pair, a);
    t = widen(a);
  } else {
    t = as_b(pair, v);
    verdict = cores ? check_b(pair, *cores, t) : check_d(pair, t);
  }
  if (!verdict.valid()) {
    std::cerr << "error invalid-tuple: ";
    write_text(std::cerr, verdict);
    return std::nullopt;
  }
  return t;
}

int cmd_build(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto cores = cores_from(cfg, pair);
  const auto t = validated_tuple(cfg, pair, cores);
  if (!t) return kExitInvalid;

  const auto pc = pc_from_tuple_b(pair, *t);
  const auto consistency = check_consistency(pc);
  if (!consistency.overall()) {
    std::cerr << "error inconsistent-presentation:\n";
    write_text(std::cerr, consistency);
    return kExitInvalid;
  }
  const auto g = build_table(pc, {.max_order = cfg.max_table, .workers = 1});
  const auto report = analyze_factorization(g);

  std::optional<bool> associative;
  if (cfg.associativity) {
    associative = verify_associativity_exhaustive(
        g, {.max_order = std::max<std::size_t>(cfg.max_table, g.order()), .workers = cfg.workers});
  }

  if (!cfg.table_path.empty()) {
    std::ofstream f(cfg.table_path);
    if (!f) throw Error(ErrorKind::parse_error, "cannot open --table " + cfg.table_path);
    write_group_table(f, pair, {t->r, t->a, t->s, t->b, t->t, t->c}, g);
  }

  const std::size_t consistent =
      std::count_if(consistency.entries.begin(), consistency.entries.end(),
                    [](const auto& e) { return e.passed; });
  std::optional<bool> cores_match;
  if (cores) {
    cores_match = report.core_x_order == pair.N / cores->n1 &&
                  report.core_z_order == pair.M / cores->m1;
  }

  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    Json j{{"n", pair.n}, {"m", pair.m}, {"tuple", to_json(*t)}};
    j["consistency"] = to_json(consistency);
    j["structure"] = to_json(report);
    if (cores) {
      j["cores"] = {{"n1", cores->n1}, {"m1", cores->m1}, {"match", *cores_match}};
    }
    if (associative) j["associative"] = *associative;
    os << j.dump(2) << '\n';
  } else {
    os << "consistency: " << consistent << '/' << consistency.entries.size() << " conditions hold\n";
    write_text(os, report);
    if (cores) {
      os << "requested cores (n1, m1) = (" << cores->n1 << ", " << cores->m1
         << "): " << (*cores_match ? "match" : "MISMATCH") << '\n';
    }
    if (associative) os << "associative: " << (*associative ? "yes" : "NO") << '\n';
  }
  if (associative && !*associative) return kExitInvalid;
  if (cores_match && !*cores_match) return kExitInvalid;
  return kExitOk;
}

// tc ------------------------------------------------------------------------

int cmd_tc(const Config& cfg) {
  const int sources = !cfg.preset.empty() + !cfg.relators.empty() + !cfg.tuple.empty();
  if (sources != 1) {
    throw Error(ErrorKind::parse_error,
                "tc needs exactly one of --preset, --relators, --tuple");
  }
  FpPres fp;
  if (!cfg.preset.empty()) {
    if (cfg.preset != "example-6-5") {
      throw Error(ErrorKind::parse_error, "--preset: unknown preset '" + cfg.preset + "'");
    }
    fp = nonabelian_commutator_example();
  } else if (!cfg.relators.empty()) {
    std::ifstream f(cfg.relators);
    if (!f) throw Error(ErrorKind::parse_error, "--relators: cannot open " + cfg.relators);
    std::stringstream ss;
    ss << f.rdbuf();
    fp = parse_relators(ss.str());
  } else {
    const auto pair = pair_from(cfg);
    const auto v = tuple_from(cfg, {8});
    fp = fp_from_extended(pair, as_b(pair, v), reduce(static_cast<std::int64_t>(v[6]), pair.N),
                          reduce(static_cast<std::int64_t>(v[7]), pair.M));
  }

  const auto table = coset_enumerate(fp, cfg.max_cosets);
  const auto report = structure_report(table, fp);
  const auto cores = cores_from_report(report);
  std::optional<bool> located;
  if (cores) located = verify_xz_commutator_location(report, *cores);

  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    Json j{{"generators", fp.generators}, {"relators", fp.relators.size()},
           {"cosets_defined", table.defined_total()}};
    j["structure"] = to_json(report);
    if (cores) j["cores"] = {{"n1", cores->n1}, {"m1", cores->m1}};
    j["xz_in_cores"] = located ? Json(*located) : Json(nullptr);
    os << j.dump(2) << '\n';
  } else {
    os << "generators: " << fp.generators << ", relators: " << fp.relators.size()
       << ", cosets defined: " << table.defined_total() << '\n';
    write_text(os, report);
    if (cores) {
      os << "cores (n1, m1): (" << cores->n1 << ", " << cores->m1 << ")\n"
         << "[x,z] in <x^n1><z^m1>: " << (*located ? "yes" : "no") << '\n';
    }
  }
  return kExitOk;
}

// crosscheck ------------------------------------------------------------------

int cmd_crosscheck(const Config& cfg) {
  const auto pair = pair_from(cfg);
  const auto cores = cores_from(cfg, pair);
  const auto t = validated_tuple(cfg, pair, cores);
  if (!t) return kExitInvalid;

  const auto collection = build_table(pc_from_tuple_b(pair, *t), {.max_order = cfg.max_table}).order();
  const auto enumeration = enumerated_order(pair, *t, cfg.max_cosets);
  const bool agree = collection == enumeration && collection == 4 * pair.N * pair.M;

  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    os << Json{{"collection", collection}, {"enumeration", enumeration}, {"agree", agree}}.dump(2)
       << '\n';
  } else {
    os << "collection: " << collection << ", enumeration: " << enumeration << ", "
       << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitInvalid;
}

// explore -------------------------------------------------------------------

// Coset enumeration over candidate commutator exponents [x,z] = x^e1 z^e2.
// No classification covers this regime, so every line is marked exploratory.
int cmd_explore(const Config& cfg, bool all_exponents, std::size_t limit) {
  const auto pair = pair_from(cfg);
  const auto cores = cores_from(cfg, pair).value_or(CoreSpec{});
  std::vector<TupleB> tuples;
  if (!cfg.tuple.empty()) {
    const auto t = as_b(pair, tuple_from(cfg, {6}));
    if (!check_b(pair, cores, t).valid()) {
      std::cerr << "error invalid-tuple: ";
      write_text(std::cerr, check_b(pair, cores, t));
      return kExitInvalid;
    }
    tuples.push_back(t);
  } else {
    tuples = enumerate_b(pair, cores, {.workers = cfg.workers, .allow_large = cfg.full});
    if (tuples.size() > limit) tuples.resize(limit);
  }

  std::vector<std::pair<Residue, Residue>> exponents;
  if (all_exponents) {
    for (Residue e1 = 0; e1 < pair.N; ++e1)
      for (Residue e2 = 0; e2 < pair.M; ++e2) exponents.emplace_back(e1, e2);
  } else {
    for (Residue k : {1u, 2u}) {
      exponents.emplace_back(k * cores.n1 % pair.N, k * cores.m1 % pair.M);
    }
  }

  const auto full = 4 * pair.N * pair.M;
  Json rows = Json::array();
  for (const auto& t : tuples) {
    for (auto [e1, e2] : exponents) {
      const auto fp = fp_from_extended(pair, t, e1, e2);
      Json row{{"tuple", to_json(t)}, {"e1", e1}, {"e2", e2}};
      try {
        const auto table = coset_enumerate(fp, cfg.max_cosets);
        const auto rep = structure_report(table, fp);
        const auto found = cores_from_report(rep);
        row["order"] = rep.order;
        row["full_order"] = rep.order == full;
        row["cores"] = found ? Json{{"n1", found->n1}, {"m1", found->m1}} : Json(nullptr);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::coset_limit_exceeded) throw;
        row["order"] = nullptr;
        row["full_order"] = nullptr;
        row["cores"] = nullptr;
      }
      rows.push_back(row);
    }
  }

  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == "json") {
    os << Json{{"exploratory", true}, {"n", pair.n}, {"m", pair.m},
               {"cores", {{"n1", cores.n1}, {"m1", cores.m1}}}, {"rows", rows}}
              .dump(2)
       << '\n';
    return kExitOk;
  }
  os << "# EXPLORATORY: [x,z] != 1 is not covered by a classification; treat as search output\n"
     << "r,a,s,b,t,c,e1,e2,order,full,n1,m1\n";
  for (const auto& row : rows) {
    const auto& t = row["tuple"];
    os << t["r"] << ',' << t["a"] << ',' << t["s"] << ',' << t["b"] << ',' << t["t"] << ','
       << t["c"] << ',' << row["e1"] << ',' << row["e2"] << ',';
    if (row["order"].is_null()) {
      os << "limit,,,\n";
      continue;
    }
    os << row["order"] << ',' << (row["full_order"].get<bool>() ? "yes" : "no") << ',';
    if (row["cores"].is_null()) {
      os << ",\n";
    } else {
      os << row["cores"]["n1"] << ',' << row["cores"]["m1"] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zappa-Szep products of two semidihedral groups"};
  app.require_subcommand(1);
  Config cfg;

  const auto ranks = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank of the first factor SD_{2^n}")->required();
    sub->add_option("--m", cfg.m, "rank of the second factor SD_{2^m}")->required();
  };
  const auto cores = [&](CLI::App* sub) {
    sub->add_option("--n1", cfg.n1, "index of the core of <x> in <x>");
    sub->add_option("--m1", cfg.m1, "index of the core of <z> in <z>");
  };
  const auto output = [&](CLI::App* sub, bool csv) {
    auto* f = sub->add_option("--format", cfg.format, "output format");
    if (csv) {
      f->check(CLI::IsMember({"text", "json", "csv"}));
    } else {
      f->check(CLI::IsMember({"text", "json"}));
    }
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
  };
  const auto workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* ea = app.add_subcommand("enumerate-a", "list all tuples (a,s,t,c) satisfying C1-C6");
  ranks(ea);
  output(ea, true);
  workers(ea);
  ea->add_flag("--full", cfg.full, "allow scans above (n, m) = (5, 5)");

  auto* eb = app.add_subcommand("enumerate-b", "list all tuples (r,a,s,b,t,c) for given cores");
  ranks(eb);
  cores(eb);
  output(eb, true);
  workers(eb);
  eb->add_flag("--full", cfg.full, "allow scans above (n, m) = (5, 5)");

  auto* ca = app.add_subcommand("check-a", "check a tuple a,s,t,c against C1-C6");
  ranks(ca);
  ca->add_option("--tuple", cfg.tuple, "a,s,t,c")->required();
  output(ca, false);

  auto* cb = app.add_subcommand("check-b", "check a tuple r,a,s,b,t,c against D1-D12 and the cores");
  ranks(cb);
  cores(cb);
  cb->add_option("--tuple", cfg.tuple, "r,a,s,b,t,c")->required();
  output(cb, false);

  auto* bd = app.add_subcommand("build", "build the group table and report its structure");
  ranks(bd);
  cores(bd);
  bd->add_option("--tuple", cfg.tuple, "a,s,t,c or r,a,s,b,t,c")->required();
  bd->add_option("--table", cfg.table_path, "write the multiplication table here");
  bd->add_option("--max-table", cfg.max_table, "largest group order to tabulate");
  bd->add_flag("--verify-associativity", cfg.associativity, "run the exhaustive triple scan");
  output(bd, false);
  workers(bd);

  auto* tc = app.add_subcommand("tc", "Todd-Coxeter enumeration of a presentation");
  tc->add_option("--preset", cfg.preset, "compiled-in presentation (example-6-5)");
  tc->add_option("--relators", cfg.relators, "relator file");
  tc->add_option("--n", cfg.n, "rank of the first factor (with --tuple)");
  tc->add_option("--m", cfg.m, "rank of the second factor (with --tuple)");
  tc->add_option("--tuple", cfg.tuple, "r,a,s,b,t,c,e1,e2 with [x,z] = x^e1 z^e2");
  tc->add_option("--max-cosets", cfg.max_cosets, "coset definition cap");
  output(tc, false);

  auto* cc = app.add_subcommand("crosscheck", "compare collection and coset enumeration orders");
  ranks(cc);
  cores(cc);
  cc->add_option("--tuple", cfg.tuple, "a,s,t,c or r,a,s,b,t,c")->required();
  cc->add_option("--max-table", cfg.max_table, "largest group order to tabulate");
  cc->add_option("--max-cosets", cfg.max_cosets, "coset definition cap");
  output(cc, false);

  bool all_exponents = false;
  std::size_t limit = 8;
  auto* ex = app.add_subcommand(
      "explore", "exploratory search over [x,z] = x^e1 z^e2 (unclassified regime)");
  ranks(ex);
  cores(ex);
  ex->add_option("--tuple", cfg.tuple, "r,a,s,b,t,c (default: the first --limit valid tuples)");
  ex->add_option("--limit", limit, "tuples taken from the enumeration");
  ex->add_flag("--all-exponents", all_exponents, "try every (e1, e2), not just the two families");
  ex->add_option("--max-cosets", cfg.max_cosets, "coset definition cap per enumeration");
  output(ex, false);
  workers(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ea->parsed()) return cmd_enumerate_a(cfg);
    if (eb->parsed()) return cmd_enumerate_b(cfg);
    if (ca->parsed()) return cmd_check_a(cfg);
    if (cb->parsed()) return cmd_check_b(cfg);
    if (bd->parsed()) return cmd_build(cfg);
    if (tc->parsed()) return cmd_tc(cfg);
    if (cc->parsed()) return cmd_crosscheck(cfg);
    if (ex->parsed()) return cmd_explore(cfg, all_exponents, limit);
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
