// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [path-to-zsprod]
//
// With a CLI path, criteria 1 and 3 are run through the command-line tool
// (JSON output) as well as through the library.  Exit status is the number
// of failed criteria, capped at 1.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsprod/arith.hpp"
#include "zsprod/congruence.hpp"
#include "zsprod/fpcoset.hpp"
#include "zsprod/pcgroup.hpp"
#include "zsprod/serialize.hpp"

using namespace zsp;

namespace {

// Sampling seed for criterion 8.
constexpr std::uint64_t kSampleSeed = 20240607;

std::string g_cli;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::vector<TupleA> sample(const std::vector<TupleA>& pool, std::size_t k, std::mt19937_64& rng) {
  std::set<std::size_t> picked;
  std::vector<TupleA> out;
  while (out.size() < k && picked.size() < pool.size()) {
    const std::size_t i = rng() % pool.size();
    if (picked.insert(i).second) out.push_back(pool[i]);
  }
  return out;
}

// 1 -------------------------------------------------------------------------
Outcome enumeration_count() {
  const std::map<Residue, std::size_t> want{{0, 24}, {2, 48}, {4, 24}, {6, 48}};
  const auto ts = enumerate_a(derive_pair(4, 4));
  std::map<Residue, std::size_t> hist;
  for (const auto& t : ts) ++hist[t.s];
  bool ok = ts.size() == 144 && hist == want;
  std::string detail = std::to_string(ts.size()) + " tuples";
  if (!g_cli.empty()) {
    int status = 0;
    const auto j = nlohmann::json::parse(run_cli("enumerate-a --n 4 --m 4 --format json", status));
    const nlohmann::json want_j{{"0", 24}, {"2", 48}, {"4", 24}, {"6", 48}};
    const bool cli_ok = status == 0 && j["count"] == 144 && j["histograms"]["s"] == want_j;
    ok = ok && cli_ok;
    detail += cli_ok ? ", cli agrees" : ", cli DISAGREES";
  }
  return {ok, detail};
}

// 2 -------------------------------------------------------------------------
Outcome witness_256() {
  const auto p = derive_pair(4, 4);
  const TupleA t{0, 2, 0, 0};
  const auto pc = pc_from_tuple_a(p, t);
  const auto cons = check_consistency(pc);
  const auto g = build_table(pc);
  const auto r = analyze_factorization(g);
  const bool ok = check_a(p, t).valid() && cons.entries.size() == 16 && cons.overall() &&
                  r.order == 256 && r.h_order == 16 && r.k_order == 16 &&
                  r.intersection_order == 1 && r.x_normal && r.z_normal;
  return {ok, "order " + std::to_string(r.order)};
}

// 3 -------------------------------------------------------------------------
Outcome flagship_example() {
  const auto fp = nonabelian_commutator_example();
  const auto table = coset_enumerate(fp);
  const auto r = structure_report(table, fp);
  bool ok = r.order == 256 && r.order_x == 8u && r.order_y == 2u && r.order_z == 8u &&
            r.order_w == 2u && r.order_h == 16u && r.order_k == 16u &&
            r.h_semidihedral == true && r.k_semidihedral == true && r.order_h_cap_k == 1u &&
            r.xz_trivial == false &&
            r.xz_exponents == std::optional<std::pair<Residue, Residue>>({2, 2}) &&
            r.core_x_order == 4u && r.core_z_order == 4u;
  std::string detail = "order " + std::to_string(r.order);
  if (!g_cli.empty()) {
    int status = 0;
    const auto j = nlohmann::json::parse(run_cli("tc --preset example-6-5 --format json", status));
    const auto& s = j["structure"];
    const bool cli_ok =
        status == 0 && s["order"] == 256 && s["order_x"] == 8 && s["order_y"] == 2 &&
        s["order_z"] == 8 && s["order_w"] == 2 && s["order_h"] == 16 && s["order_k"] == 16 &&
        s["h_semidihedral"] == true && s["k_semidihedral"] == true && s["order_h_cap_k"] == 1 &&
        s["xz_trivial"] == false && s["xz_commutator"] == nlohmann::json{{"e1", 2}, {"e2", 2}} &&
        s["core_x_order"] == 4 && s["core_z_order"] == 4;
    ok = ok && cli_ok;
    detail += cli_ok ? ", cli agrees" : ", cli DISAGREES";
  }
  return {ok, detail};
}

// 4 -------------------------------------------------------------------------
Outcome checker_consistency_equivalence() {
  std::size_t checked = 0, disagreements = 0;
  for (auto [n, m] : {std::pair{4u, 4u}, {5, 5}}) {
    const auto p = derive_pair(n, m);
    for (Residue a = 0; a < p.M; ++a)
      for (Residue s = 0; s < p.N; ++s)
        for (Residue t = 0; t < p.N; ++t)
          for (Residue c = 0; c < p.M; ++c) {
            const TupleA ta{a, s, t, c};
            ++checked;
            disagreements +=
                check_a(p, ta).valid() != check_consistency(pc_from_tuple_a(p, ta)).overall();
          }
  }
  return {checked == 4096 + 65536 && disagreements == 0,
          std::to_string(checked) + " tuples, " + std::to_string(disagreements) +
              " disagreements"};
}

// 5 -------------------------------------------------------------------------
Outcome reduction_property() {
  const auto p = derive_pair(4, 4);
  std::vector<TupleA> projected;
  for (const auto& t : enumerate_b(p, {1, 1})) projected.push_back(project(t));
  const auto a = enumerate_a(p);
  return {projected == a, std::to_string(projected.size()) + " vs " + std::to_string(a.size())};
}

// 6 -------------------------------------------------------------------------
Outcome core_selection() {
  const auto p = derive_pair(4, 4);
  bool ok = true;
  std::string detail;
  for (CoreSpec cores : {CoreSpec{2, 2}, CoreSpec{2, 1}}) {
    const auto tuples = enumerate_b(p, cores);
    std::size_t brute = 0;
    for (Residue r = 0; r < p.N; ++r)
      for (Residue a = 0; a < p.M; ++a)
        for (Residue s = 0; s < p.N; ++s)
          for (Residue b = 0; b < p.M; ++b)
            for (Residue t = 0; t < p.N; ++t)
              for (Residue c = 0; c < p.M; ++c)
                brute += check_b(p, cores, TupleB{r, a, s, b, t, c}).valid();
    std::size_t matched = 0;
    for (const auto& t : tuples) {
      const auto rep = analyze_factorization(build_table(pc_from_tuple_b(p, t)));
      matched += rep.core_x_order == p.N / cores.n1 && rep.core_z_order == p.M / cores.m1;
    }
    ok = ok && brute == tuples.size() && matched == tuples.size();
    if (!detail.empty()) detail += "; ";
    detail += "(" + std::to_string(cores.n1) + "," + std::to_string(cores.m1) +
              "): " + std::to_string(matched) + "/" + std::to_string(tuples.size()) +
              " match, filter " + std::to_string(brute);
  }
  return {ok, detail};
}

// 7 -------------------------------------------------------------------------
Outcome exhaustive_associativity() {
  const auto p = derive_pair(4, 4);
  bool ok = true;
  std::string detail;
  for (const TupleA t : {TupleA{0, 2, 0, 0}, TupleA{0, 0, 0, 0}}) {
    const auto g = build_table(pc_from_tuple_a(p, t));
    const auto start = std::chrono::steady_clock::now();
    const bool assoc = verify_associativity_exhaustive(g, {.max_order = 256, .workers = 4});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && assoc && secs < 30.0;
    if (!detail.empty()) detail += "; ";
    detail += "(" + csv_row(t) + ") " + (assoc ? "associative" : "NOT associative") + " in " +
              std::to_string(secs).substr(0, 5) + " s";
  }
  return {ok, detail};
}

// 8 -------------------------------------------------------------------------
Outcome oracle_agreement() {
  std::mt19937_64 rng(kSampleSeed);
  std::size_t agreed = 0, total = 0;
  for (auto [n, m, k] : {std::tuple{4u, 4u, 20u}, {4u, 5u, 10u}}) {
    const auto p = derive_pair(n, m);
    for (const auto& t : sample(enumerate_a(p), k, rng)) {
      ++total;
      const auto collected = build_table(pc_from_tuple_a(p, t)).order();
      const auto enumerated = enumerated_order(p, widen(t));
      agreed += collected == 4 * p.N * p.M && enumerated == collected;
    }
  }
  return {total == 30 && agreed == total,
          std::to_string(agreed) + "/" + std::to_string(total) + " agree (seed " +
              std::to_string(kSampleSeed) + ")"};
}

// 9 -------------------------------------------------------------------------
Outcome square_roots() {
  bool ok = true;
  for (unsigned n = 4; n <= 12; ++n) {
    const Residue mod = Residue{1} << (n - 1);
    std::vector<Residue> brute;
    for (Residue u = 0; u < mod; ++u)
      if (mul_mod(u, u, mod) == 1) brute.push_back(u);
    ok = ok && sqrt1_units(mod) == brute;
    for (Residue s : admissible_s_values(mod)) ok = ok && s % 2 == 0;
  }
  return {ok, "n = 4..12"};
}

// 10 ------------------------------------------------------------------------
Outcome even_entries() {
  bool ok = true;
  std::string detail;
  for (auto [n, m] : {std::pair{4u, 4u}, {4, 5}, {5, 5}}) {
    const auto p = derive_pair(n, m);
    const auto ts = enumerate_a(p);
    ok = ok && !ts.empty() && parity_audit(p, ts);
    if (!detail.empty()) detail += ", ";
    detail += "(" + std::to_string(n) + "," + std::to_string(m) + "): " + std::to_string(ts.size());
  }
  return {ok, detail};
}

}  // namespace


int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime bound
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "enumeration count", 1.0, enumeration_count},
      {2, "order-256 witness", 5.0, witness_256},
      {3, "flagship example", 10.0, flagship_example},
      {4, "checker/consistency equivalence", 60.0, checker_consistency_equivalence},
      {5, "reduction to cores (1,1)", 0.0, reduction_property},
      {6, "core selection", 0.0, core_selection},
      {7, "exhaustive associativity", 60.0, exhaustive_associativity},
      {8, "oracle agreement", 0.0, oracle_agreement},
      {9, "square roots of unity", 1.0, square_roots},
      {10, "even entries", 0.0, even_entries},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s  %2d  %-34s %8.3f s%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                in_time ? "" : " (over limit)", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
