#include "zsprod/fpcoset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace zsp {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::optional<std::size_t> generator_index(const FpPres& fp, char name) {
  const auto pos = fp.generators.find(name);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

namespace {

constexpr Letter kW = 1, kY = 2, kZ = 3, kX = 4;

void append_power(Word& w, Letter l, std::uint64_t k) { w.insert(w.end(), k, l); }

}  // namespace

FpPres fp_from_extended(const SdPair& pair, const TupleB& t, Residue e1, Residue e2) {
  FpPres fp;
  fp.generators = std::string(kGeneratorNames);
  const auto rel = [&](std::initializer_list<Letter> head,
                       std::initializer_list<std::pair<Letter, std::uint64_t>> tail) {
    Word w(head);
    for (auto [l, k] : tail) append_power(w, l, k);
    fp.relators.push_back(free_reduce(std::move(w)));
  };
  rel({}, {{kX, pair.N}});
  rel({}, {{kY, 2}});
  rel({}, {{kZ, pair.M}});
  rel({}, {{kW, 2}});
  rel({-kY, kX, kY}, {{-kX, pair.alpha}});
  rel({-kW, kZ, kW}, {{-kZ, pair.beta}});
  // (x^p z^q)^-1 = z^-q x^-p
  rel({-kX, -kZ, kX, kZ}, {{-kZ, e2 % pair.M}, {-kX, e1 % pair.N}});
  rel({-kZ, -kY, kZ, kY}, {{-kZ, t.a % pair.M}, {-kX, t.r % pair.N}});
  rel({-kX, -kW, kX, kW}, {{-kZ, t.b % pair.M}, {-kX, t.s % pair.N}});
  rel({-kY, -kW, kY, kW}, {{-kZ, t.c % pair.M}, {-kX, t.t % pair.N}});
  return fp;
}

FpPres semidihedral_presentation(unsigned n) {
  const Residue order_x = Residue{1} << (n - 1);
  const Residue alpha = (Residue{1} << (n - 2)) - 1;
  FpPres fp;
  fp.generators = "yx";
  const Letter y = 1, x = 2;
  Word wx, wy{y, y}, conj{-y, x, y};
  append_power(wx, x, order_x);
  append_power(conj, -x, alpha);
  fp.relators = {wx, wy, free_reduce(conj)};
  return fp;
}

FpPres nonabelian_commutator_example() {
  const SdPair pair = derive_pair(4, 4);
  return fp_from_extended(pair, TupleB{4, 0, 0, 4, 0, 0}, 2, 2);
}

FpPres parse_relators(std::string_view text) {
  std::vector<std::vector<std::pair<char, bool>>> raw;  // (name, inverse)
  std::size_t line_no = 0;
  std::string present;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::pair<char, bool>> letters;
    std::size_t i = 0;
    const auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(line_no) + ": " + why);
    };
    while (i < line.size()) {
      const char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
        ++i;
        continue;
      }
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (kGeneratorNames.find(lower) == std::string_view::npos) {
        fail(std::string("unexpected character '") + ch + "'");
      }
      ++i;
      std::uint64_t reps = 1;
      if (i < line.size() && line[i] == '^') {
        ++i;
        const char* first = line.data() + i;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, reps);
        if (ec != std::errc{} || ptr == first) fail("expected a repetition count after '^'");
        if (reps == 0 || reps > 1'000'000) fail("repetition count out of range");
        i += static_cast<std::size_t>(ptr - first);
      }
      letters.insert(letters.end(), reps, {lower, lower != ch});
      if (present.find(lower) == std::string::npos) present.push_back(lower);
    }
    if (!letters.empty()) raw.push_back(std::move(letters));
  }
  FpPres fp;
  for (char g : kGeneratorNames) {
    if (present.find(g) != std::string::npos) fp.generators.push_back(g);
  }
  for (const auto& letters : raw) {
    Word w;
    for (auto [name, inv] : letters) {
      const auto g = static_cast<Letter>(fp.generators.find(name)) + 1;
      w.push_back(inv ? -g : g);
    }
    w = free_reduce(std::move(w));
    if (w.empty()) {
      throw Error(ErrorKind::parse_error, "a relator reduces to the empty word");
    }
    fp.relators.push_back(std::move(w));
  }
  if (fp.relators.empty()) throw Error(ErrorKind::parse_error, "no relators given");
  return fp;
}

std::string format_word(const FpPres& fp, const Word& w) {
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out.push_back(' ');
    const char name = fp.generators[static_cast<std::size_t>(std::abs(l)) - 1];
    out.push_back(l < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(name)))
                        : name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coset enumeration

CosetTable::CosetTable(std::size_t generator_count, std::vector<std::int32_t> entries,
                       bool complete, std::size_t defined_total)
    : gens_(generator_count),
      entries_(std::move(entries)),
      complete_(complete),
      defined_total_(defined_total) {}

std::int32_t CosetTable::trace(std::size_t coset, std::span<const Letter> w) const noexcept {
  auto c = static_cast<std::int32_t>(coset);
  for (Letter l : w) {
    c = act(static_cast<std::size_t>(c), static_cast<std::size_t>(std::abs(l)) - 1, l < 0);
    if (c < 0) return -1;
  }
  return c;
}

namespace {

constexpr std::int32_t kUndefined = -1;

std::size_t column_of(Letter l) {
  return 2 * (static_cast<std::size_t>(std::abs(l)) - 1) + (l < 0 ? 1 : 0);
}
std::size_t inverse_column(std::size_t col) { return col ^ 1; }

// Working state for one HLT enumeration.  Rows are never reused; a coset is
// dead once it has been merged into a smaller representative.
class Enumerator {
 public:
  Enumerator(const FpPres& fp, std::size_t max_cosets)
      : fp_(fp), cols_(2 * fp.generators.size()), max_cosets_(max_cosets) {
    relators_.reserve(fp.relators.size());
    for (const auto& r : fp.relators) {
      std::vector<std::size_t> cols;
      for (Letter l : r) cols.push_back(column_of(l));
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  CosetTable run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& rel : relators_) {
        if (!alive(c)) break;
        scan_and_fill(static_cast<std::int32_t>(c), rel);
      }
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(static_cast<std::int32_t>(c), x) == kUndefined) {
          define(static_cast<std::int32_t>(c), x);
        }
      }
    }
    return compact();
  }

 private:
  std::int32_t& at(std::int32_t c, std::size_t col) {
    return table_[static_cast<std::size_t>(c) * cols_ + col];
  }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t new_coset() {
    if (parent_.size() >= max_cosets_) {
      throw Error(ErrorKind::coset_limit_exceeded,
                  "enumeration did not close within " + std::to_string(max_cosets_) +
                      " cosets");
    }
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    return c;
  }

  void define(std::int32_t c, std::size_t x) {
    const std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, inverse_column(x)) = c;
  }

  void scan_and_fill(std::int32_t c, const std::vector<std::size_t>& rel) {
    std::int32_t f = c, b = c;
    std::size_t i = 0, j = rel.size();
    while (true) {
      while (i < j && at(f, rel[i]) != kUndefined) f = at(f, rel[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_column(rel[j - 1])) != kUndefined) {
        b = at(b, inverse_column(rel[--j]));
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, rel[i]) = b;
        at(b, inverse_column(rel[i])) = f;
        return;
      }
      define(f, rel[i]);
    }
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const std::int32_t next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::int32_t g = queue_[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = at(g, x);
        if (d == kUndefined) continue;
        const std::size_t xi = inverse_column(x);
        at(d, xi) = kUndefined;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, xi) != kUndefined) {
          merge(mu, at(nu, xi));
        } else {
          at(mu, x) = nu;
          at(nu, xi) = mu;
        }
      }
    }
  }

  // Breadth-first renumbering of the live cosets from coset 0, following the
  // columns in order (g0, g0^-1, g1, g1^-1, ...).
  CosetTable compact() {
    std::vector<std::int32_t> renum(parent_.size(), kUndefined);
    std::vector<std::int32_t> order{0};
    renum[0] = 0;
    bool complete = true;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = at(order[qi], x);
        if (d == kUndefined) {
          complete = false;
          continue;
        }
        if (renum[d] == kUndefined) {
          renum[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::int32_t> entries(order.size() * cols_, kUndefined);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = at(order[k], x);
        if (d != kUndefined) entries[k * cols_ + x] = renum[d];
      }
    }
    return CosetTable(fp_.generators.size(), std::move(entries), complete, parent_.size());
  }

  const FpPres& fp_;
  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
};

}  // namespace

CosetTable coset_enumerate(const FpPres& fp, std::size_t max_cosets) {
  if (max_cosets < 1) {
    throw Error(ErrorKind::precondition_violated, "max_cosets must be at least 1");
  }
  CosetTable table = Enumerator(fp, max_cosets).run();
  if (!audit_table(table, fp)) {
    throw Error(ErrorKind::incomplete_table, "compacted table failed the relator audit");
  }
  return table;
}

bool audit_table(const CosetTable& table, const FpPres& fp) {
  if (!table.complete()) return false;
  for (std::size_t c = 0; c < table.cosets(); ++c) {
    for (std::size_t g = 0; g < table.generator_count(); ++g) {
      const auto d = table.act(c, g);
      if (d < 0 || table.act(static_cast<std::size_t>(d), g, true) != static_cast<std::int32_t>(c)) {
        return false;
      }
    }
    for (const auto& r : fp.relators) {
      if (table.trace(c, r) != static_cast<std::int32_t>(c)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutation routines for the regular representation.

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& other) const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[k] = other.images_[images_[k]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    img[images_[k]] = static_cast<std::uint32_t>(k);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::pow(std::uint64_t e) const {
  Permutation out = identity(images_.size());
  for (std::uint64_t i = 0; i < e; ++i) out = out.then(*this);
  return out;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t k = start; !seen[k]; k = images_[k]) {
      seen[k] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::vector<Permutation> regular_representation(const CosetTable& table) {
  if (!table.complete()) {
    throw Error(ErrorKind::incomplete_table, "regular representation needs a complete table");
  }
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < table.generator_count(); ++g) {
    std::vector<std::uint32_t> img(table.cosets());
    for (std::size_t c = 0; c < table.cosets(); ++c) {
      img[c] = static_cast<std::uint32_t>(table.act(c, g));
    }
    gens.emplace_back(std::move(img));
  }
  return gens;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using PermSet = std::unordered_map<Permutation, std::size_t, PermHash>;

PermSet index_set(const std::vector<Permutation>& elements) {
  PermSet s;
  for (std::size_t i = 0; i < elements.size(); ++i) s.emplace(elements[i], i);
  return s;
}

}  // namespace

std::vector<Permutation> permutation_closure(std::size_t degree,
                                             std::span<const Permutation> generators) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  PermSet seen;
  seen.emplace(elements.front(), 0);
  for (std::size_t qi = 0; qi < elements.size(); ++qi) {
    for (const auto& g : generators) {
      Permutation next = elements[qi].then(g);
      if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

namespace {

// {h in H : g h g^-1 in H for every g in G}, i.e. the intersection of all
// conjugates g^-1 H g.
std::size_t core_order(const std::vector<Permutation>& group,
                       const std::vector<Permutation>& sub) {
  const PermSet members = index_set(sub);
  std::size_t count = 0;
  for (const auto& h : sub) {
    bool in_all = true;
    for (const auto& g : group) {
      if (!members.contains(g.then(h).then(g.inverse()))) {
        in_all = false;
        break;
      }
    }
    if (in_all) ++count;
  }
  return count;
}

bool semidihedral(const Permutation& c, const Permutation& i, std::size_t sub_order) {
  const auto oc = c.order();
  if (oc < 8 || !is_power_of_two(oc) || i.order() != 2) return false;
  return i.inverse().then(c).then(i) == c.pow(oc / 2 - 1) && sub_order == 2 * oc;
}

}  // namespace

StructureReport structure_report(const CosetTable& table, const FpPres& fp) {
  if (!table.complete()) {
    throw Error(ErrorKind::incomplete_table, "structure report needs a complete table");
  }
  const auto gens = regular_representation(table);
  const std::size_t degree = table.cosets();
  const auto group = permutation_closure(degree, gens);

  StructureReport rep;
  rep.order = group.size();
  const auto find = [&](char name) -> const Permutation* {
    const auto idx = generator_index(fp, name);
    return idx ? &gens[*idx] : nullptr;
  };
  const Permutation* w = find('w');
  const Permutation* y = find('y');
  const Permutation* z = find('z');
  const Permutation* x = find('x');
  if (w) rep.order_w = w->order();
  if (y) rep.order_y = y->order();
  if (z) rep.order_z = z->order();
  if (x) rep.order_x = x->order();

  std::optional<std::vector<Permutation>> h, k;
  if (x && y) {
    const Permutation hg[] = {*x, *y};
    h = permutation_closure(degree, hg);
    rep.order_h = h->size();
    rep.h_semidihedral = semidihedral(*x, *y, h->size());
  }
  if (z && w) {
    const Permutation kg[] = {*z, *w};
    k = permutation_closure(degree, kg);
    rep.order_k = k->size();
    rep.k_semidihedral = semidihedral(*z, *w, k->size());
  }
  if (h && k) {
    const PermSet in_k = index_set(*k);
    rep.order_h_cap_k = static_cast<std::size_t>(std::count_if(
        h->begin(), h->end(), [&](const Permutation& p) { return in_k.contains(p); }));
  }
  if (x && z) {
    const Permutation comm = x->inverse().then(z->inverse()).then(*x).then(*z);
    rep.xz_trivial = comm.is_identity();
    const auto ox = x->order(), oz = z->order();
    std::vector<Permutation> zpow{Permutation::identity(degree)};
    for (std::uint64_t j = 1; j < oz; ++j) zpow.push_back(zpow.back().then(*z));
    Permutation xp = Permutation::identity(degree);
    for (std::uint64_t i = 0; i < ox && !rep.xz_exponents; ++i, xp = xp.then(*x)) {
      for (std::uint64_t j = 0; j < oz; ++j) {
        if (xp.then(zpow[j]) == comm) {
          rep.xz_exponents = std::pair<Residue, Residue>{i, j};
          break;
        }
      }
    }
  }
  if (x) rep.core_x_order = core_order(group, permutation_closure(degree, std::span(x, 1)));
  if (z) rep.core_z_order = core_order(group, permutation_closure(degree, std::span(z, 1)));
  return rep;
}

std::optional<CoreSpec> cores_from_report(const StructureReport& report) {
  if (!report.order_x || !report.order_z || !report.core_x_order || !report.core_z_order) {
    return std::nullopt;
  }
  return CoreSpec{*report.order_x / *report.core_x_order,
                  *report.order_z / *report.core_z_order};
}

bool verify_xz_commutator_location(const StructureReport& report, const CoreSpec& cores) {
  if (report.xz_trivial.value_or(false)) return true;
  if (!report.xz_exponents || cores.n1 == 0 || cores.m1 == 0) return false;
  const auto [e1, e2] = *report.xz_exponents;
  return e1 % cores.n1 == 0 && e2 % cores.m1 == 0;
}

std::size_t enumerated_order(const SdPair& pair, const TupleB& t, std::size_t max_cosets) {
  if (!check_d(pair, t).valid()) {
    throw Error(ErrorKind::precondition_violated,
                "crosscheck needs a tuple satisfying (D1)-(D12)");
  }
  return coset_enumerate(fp_from_extended(pair, t, 0, 0), max_cosets).cosets();
}

bool crosscheck_order(const SdPair& pair, const TupleB& t, std::size_t max_cosets) {
  return enumerated_order(pair, t, max_cosets) == 4 * pair.N * pair.M;
}

}  // namespace zsp
