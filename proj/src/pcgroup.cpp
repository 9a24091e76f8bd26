#include "zsprod/pcgroup.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

namespace zsp {

namespace {

// A-element arithmetic.  A = <z> x <x> is abelian, so products add exponents.
AElem a_add(const SdPair& p, const AElem& u, const AElem& v) {
  return {add_mod(u.z, v.z, p.M), add_mod(u.x, v.x, p.N)};
}

// Conjugation of z^i x^j by w: (z^w)^i (x^w)^j.
AElem a_conj_w(const PcData& pc, const AElem& e) {
  const auto& p = pc.pair;
  return {add_mod(mul_mod(e.z, pc.z_by_w, p.M), mul_mod(e.x, pc.x_by_w.z, p.M), p.M),
          mul_mod(e.x, pc.x_by_w.x, p.N)};
}

// Conjugation of z^i x^j by y: (z^y)^i (x^y)^j.
AElem a_conj_y(const PcData& pc, const AElem& e) {
  const auto& p = pc.pair;
  return {mul_mod(e.z, pc.z_by_y.z, p.M),
          add_mod(mul_mod(e.z, pc.z_by_y.x, p.N), mul_mod(e.x, pc.x_by_y, p.N), p.N)};
}

AElem a_part(const NormalForm& nf) { return {nf.z, nf.x}; }

NormalForm with_a(Residue w, Residue y, const AElem& a) { return {w, y, a.z, a.x}; }

template <typename Body>
void parallel_rows(std::size_t rows, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows)));
  if (workers == 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) body(r);
    });
  }
}

}  // namespace

PcData pc_from_tuple_b(const SdPair& pair, const TupleB& t) {
  PcData pc;
  pc.pair = pair;
  pc.y_by_w = {t.c % pair.M, t.t % pair.N};
  pc.z_by_w = pair.beta % pair.M;
  pc.x_by_w = {t.b % pair.M, add_mod(1, t.s, pair.N)};
  pc.z_by_y = {add_mod(1, t.a, pair.M), t.r % pair.N};
  pc.x_by_y = pair.alpha % pair.N;
  return pc;
}

PcData pc_from_tuple_a(const SdPair& pair, const TupleA& t) {
  return pc_from_tuple_b(pair, widen(t));
}

NormalForm generator(Gen g) noexcept {
  switch (g) {
    case Gen::w: return {1, 0, 0, 0};
    case Gen::y: return {0, 1, 0, 0};
    case Gen::z: return {0, 0, 1, 0};
    case Gen::x: return {0, 0, 0, 1};
  }
  return {};
}

NormalForm collect_multiply(const PcData& pc, const NormalForm& u,
                            const NormalForm& v) {
  const auto& p = pc.pair;
  Residue w = u.w;
  Residue y = u.y;
  AElem tail = a_part(u);
  if (v.w) {
    // y^{u.y} A w = w (y^w)^{u.y} A^w, and y^w = y * y_by_w.
    tail = a_conj_w(pc, tail);
    if (y) tail = a_add(p, pc.y_by_w, tail);
    w ^= 1;
  }
  if (v.y) {
    tail = a_conj_y(pc, tail);
    y ^= 1;
  }
  return with_a(w, y, a_add(p, tail, a_part(v)));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::W: return "W";
    case Family::C: return "C";
  }
  return "?";
}

bool ConsistencyReport::overall() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ConsistencyEntry& e) { return e.passed; });
}

namespace {

Residue relative_order(const SdPair& p, Gen g) {
  switch (g) {
    case Gen::w:
    case Gen::y: return 2;
    case Gen::z: return p.M;
    case Gen::x: return p.N;
  }
  return 1;
}

// Right-hand side of the conjugate relation g_j^{g_i}, i < j.
NormalForm conjugate_relation(const PcData& pc, Gen j, Gen i) {
  using enum Gen;
  if (i == w && j == y) return with_a(0, 1, pc.y_by_w);
  if (i == w && j == z) return {0, 0, pc.z_by_w, 0};
  if (i == w && j == x) return with_a(0, 0, pc.x_by_w);
  if (i == y && j == z) return with_a(0, 0, pc.z_by_y);
  if (i == y && j == x) return {0, 0, 0, pc.x_by_y};
  if (i == z && j == x) return generator(x);
  throw Error(ErrorKind::precondition_violated, "no conjugate relation for this pair");
}

NormalForm identity() { return {}; }

NormalForm power(const PcData& pc, const NormalForm& e, Residue k) {
  NormalForm out = identity();
  for (Residue i = 0; i < k; ++i) out = collect_multiply(pc, out, e);
  return out;
}

Residue exponent(const NormalForm& e, Gen g) {
  switch (g) {
    case Gen::w: return e.w;
    case Gen::y: return e.y;
    case Gen::z: return e.z;
    case Gen::x: return e.x;
  }
  return 0;
}

// e^{g_i}, computed letter by letter as the product of (g_k^{g_i})^{e_k}.
// Defined when e only involves generators after g_i, or when both e and g_i
// lie in the abelian A (the only relation there is x^z = x).
NormalForm conj_by(const PcData& pc, const NormalForm& e, Gen i) {
  const auto idx = static_cast<unsigned>(i);
  NormalForm out = identity();
  for (Gen k : {Gen::w, Gen::y, Gen::z, Gen::x}) {
    const Residue ek = exponent(e, k);
    if (ek == 0) continue;
    const auto kdx = static_cast<unsigned>(k);
    NormalForm image;
    if (kdx > idx) {
      image = conjugate_relation(pc, k, i);
    } else if (kdx == idx || (idx >= 3 && kdx >= 3)) {
      image = generator(k);
    } else {
      throw Error(ErrorKind::precondition_violated,
                  "conjugating an earlier generator by a later one");
    }
    out = collect_multiply(pc, out, power(pc, image, ek));
  }
  return out;
}

// e^word for a word given in normal form: conjugate by each letter in turn.
NormalForm conj_by_word(const PcData& pc, NormalForm e, const NormalForm& word) {
  for (Gen g : {Gen::w, Gen::y, Gen::z, Gen::x}) {
    for (Residue k = exponent(word, g); k > 0; --k) e = conj_by(pc, e, g);
  }
  return e;
}

ConsistencyEntry compare(const SdPair& p, Family f, std::array<unsigned, 3> index,
                         const NormalForm& lhs, const NormalForm& rhs) {
  return {f, index, lhs == rhs,
          {sub_mod(lhs.z, rhs.z, p.M), sub_mod(lhs.x, rhs.x, p.N)}};
}

constexpr Gen kGens[] = {Gen::w, Gen::y, Gen::z, Gen::x};

}  // namespace

ConsistencyReport check_consistency(const PcData& pc) {
  const auto& p = pc.pair;
  ConsistencyReport report;
  const auto num = [](Gen g) { return static_cast<unsigned>(g); };

  // (P) g_j^{g_i^{e_i}} = g_j: conjugate e_i times.
  for (Gen i : kGens) {
    for (Gen j : kGens) {
      if (num(j) <= num(i)) continue;
      NormalForm e = generator(j);
      for (Residue k = relative_order(p, i); k > 0; --k) e = conj_by(pc, e, i);
      report.entries.push_back(compare(p, Family::P, {num(i), num(j), 0}, e, generator(j)));
    }
  }
  // (W) (g_j^{g_i})^{e_j} = 1.
  for (Gen i : kGens) {
    for (Gen j : kGens) {
      if (num(j) <= num(i)) continue;
      const NormalForm lhs = power(pc, conjugate_relation(pc, j, i), relative_order(p, j));
      report.entries.push_back(compare(p, Family::W, {num(i), num(j), 0}, lhs, identity()));
    }
  }
  // (C) (g_k^{g_j})^{g_i} = (g_k^{g_i})^{(g_j^{g_i})}.
  for (Gen i : kGens) {
    for (Gen j : kGens) {
      for (Gen k : kGens) {
        if (!(num(i) < num(j) && num(j) < num(k))) continue;
        const NormalForm lhs = conj_by(pc, conjugate_relation(pc, k, j), i);
        const NormalForm rhs = conj_by_word(pc, conjugate_relation(pc, k, i),
                                            conjugate_relation(pc, j, i));
        report.entries.push_back(
            compare(p, Family::C, {num(i), num(j), num(k)}, lhs, rhs));
      }
    }
  }
  return report;
}

ElementIndex index_of(const SdPair& pair, const NormalForm& nf) noexcept {
  return static_cast<ElementIndex>(((nf.w * 2 + nf.y) * pair.M + nf.z) * pair.N + nf.x);
}

NormalForm normal_form_at(const SdPair& pair, ElementIndex index) noexcept {
  NormalForm nf;
  std::uint64_t i = index;
  nf.x = i % pair.N;
  i /= pair.N;
  nf.z = i % pair.M;
  i /= pair.M;
  nf.y = i % 2;
  nf.w = i / 2;
  return nf;
}

GroupTable::GroupTable(std::size_t order, std::vector<ElementIndex> product,
                       std::vector<NormalForm> labels, Generators gens)
    : order_(order),
      product_(std::move(product)),
      inverse_(order, static_cast<ElementIndex>(order)),
      labels_(std::move(labels)),
      gens_(gens) {
  for (std::size_t a = 0; a < order_; ++a) {
    const auto r = row(static_cast<ElementIndex>(a));
    const auto it = std::find(r.begin(), r.end(), ElementIndex{0});
    if (it != r.end()) inverse_[a] = static_cast<ElementIndex>(it - r.begin());
  }
}

ElementIndex GroupTable::power(ElementIndex a, std::uint64_t e) const noexcept {
  ElementIndex out = 0;
  for (std::uint64_t i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

std::uint64_t GroupTable::element_order(ElementIndex a) const noexcept {
  ElementIndex cur = a;
  for (std::uint64_t k = 1; k <= order_; ++k) {
    if (cur == 0) return k;
    cur = mul(cur, a);
  }
  return 0;
}

GroupTable build_table(const PcData& pc, const TableOptions& opts) {
  if (!check_consistency(pc).overall()) {
    throw Error(ErrorKind::inconsistent_presentation,
                "the presentation fails its consistency conditions");
  }
  const auto& p = pc.pair;
  const std::uint64_t order = 4 * p.N * p.M;
  if (order > opts.max_order) {
    throw Error(ErrorKind::table_too_large,
                "group order " + std::to_string(order) + " exceeds the cap " +
                    std::to_string(opts.max_order));
  }
  std::vector<NormalForm> labels(order);
  for (std::uint64_t i = 0; i < order; ++i) {
    labels[i] = normal_form_at(p, static_cast<ElementIndex>(i));
  }
  std::vector<ElementIndex> product(order * order);
  parallel_rows(order, opts.workers, [&](std::size_t a) {
    for (std::size_t b = 0; b < order; ++b) {
      product[a * order + b] = index_of(p, collect_multiply(pc, labels[a], labels[b]));
    }
  });
  GroupTable::Generators gens{index_of(p, generator(Gen::w)), index_of(p, generator(Gen::y)),
                              index_of(p, generator(Gen::z)), index_of(p, generator(Gen::x))};
  GroupTable g(order, std::move(product), std::move(labels), gens);
  if (!is_latin_square(g)) {
    throw Error(ErrorKind::inconsistent_presentation,
                "collected product table is not a Latin square");
  }
  return g;
}

bool is_latin_square(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = g.mul(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
      if (v >= n || seen[v] == stamp) return false;
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = g.mul(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
      if (seen[v] == stamp) return false;
      seen[v] = stamp;
    }
  }
  return true;
}

bool SubgroupHandle::contains(ElementIndex e) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), e);
}

SubgroupHandle subgroup_closure(const GroupTable& g,
                                std::span<const ElementIndex> generators) {
  std::vector<char> seen(g.order(), 0);
  std::deque<ElementIndex> queue{0};
  seen[0] = 1;
  SubgroupHandle h;
  h.generators.assign(generators.begin(), generators.end());
  while (!queue.empty()) {
    const ElementIndex e = queue.front();
    queue.pop_front();
    h.elements.push_back(e);
    for (ElementIndex gen : generators) {
      const ElementIndex next = g.mul(e, gen);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

bool is_normal(const GroupTable& g, const SubgroupHandle& h) {
  std::vector<char> member(g.order(), 0);
  for (auto e : h.elements) member[e] = 1;
  for (std::size_t k = 0; k < g.order(); ++k) {
    const auto gk = static_cast<ElementIndex>(k);
    const ElementIndex gi = g.inverse(gk);
    for (auto e : h.elements) {
      if (!member[g.mul(g.mul(gi, e), gk)]) return false;
    }
  }
  return true;
}

SubgroupHandle core_of(const GroupTable& g, const SubgroupHandle& h) {
  std::vector<char> member(g.order(), 0);
  for (auto e : h.elements) member[e] = 1;
  // e lies in every conjugate k^-1 H k iff k e k^-1 lies in H for all k.
  SubgroupHandle core;
  for (auto e : h.elements) {
    bool in_all = true;
    for (std::size_t k = 0; k < g.order() && in_all; ++k) {
      const auto gk = static_cast<ElementIndex>(k);
      in_all = member[g.mul(g.mul(gk, e), g.inverse(gk))] != 0;
    }
    if (in_all) core.elements.push_back(e);
  }
  // Greedy generating set, in index order.
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  for (auto e : core.elements) {
    if (covered[e]) continue;
    core.generators.push_back(e);
    for (auto c : subgroup_closure(g, core.generators).elements) covered[c] = 1;
  }
  return core;
}

bool verify_associativity_exhaustive(const GroupTable& g, const AssociativityOptions& opts) {
  const std::size_t n = g.order();
  if (n > opts.max_order) {
    throw Error(ErrorKind::table_too_large,
                "order " + std::to_string(n) + " exceeds the exhaustive-scan cap " +
                    std::to_string(opts.max_order));
  }
  std::vector<char> row_ok(n, 1);
  parallel_rows(n, opts.workers, [&](std::size_t a) {
    const auto ea = static_cast<ElementIndex>(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto eb = static_cast<ElementIndex>(b);
      const auto ab_row = g.row(g.mul(ea, eb));
      const auto b_row = g.row(eb);
      const auto a_row = g.row(ea);
      for (std::size_t c = 0; c < n; ++c) {
        if (ab_row[c] != a_row[b_row[c]]) {
          row_ok[a] = 0;
          return;
        }
      }
    }
  });
  return std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });
}

namespace {

// <c, i> with c of order 2^k >= 8, i of order 2, c^i = c^{2^{k-1}-1} and
// |<c, i>| = 2 ord(c).
bool semidihedral_relations(const GroupTable& g, ElementIndex c, ElementIndex i,
                            std::size_t subgroup_order) {
  const auto oc = g.element_order(c);
  if (oc < 8 || !is_power_of_two(oc) || g.element_order(i) != 2) return false;
  const ElementIndex conj = g.mul(g.mul(g.inverse(i), c), i);
  return conj == g.power(c, oc / 2 - 1) && subgroup_order == 2 * oc;
}

}  // namespace

FactorizationReport analyze_factorization(const GroupTable& g) {
  const auto& gens = g.generators();
  FactorizationReport r;
  r.order = g.order();
  const ElementIndex hg[] = {gens.x, gens.y};
  const ElementIndex kg[] = {gens.z, gens.w};
  const auto h = subgroup_closure(g, hg);
  const auto k = subgroup_closure(g, kg);
  r.h_order = h.order();
  r.k_order = k.order();
  std::vector<ElementIndex> both;
  std::set_intersection(h.elements.begin(), h.elements.end(), k.elements.begin(),
                        k.elements.end(), std::back_inserter(both));
  r.intersection_order = both.size();
  const auto cx = subgroup_closure(g, std::span(&gens.x, 1));
  const auto cz = subgroup_closure(g, std::span(&gens.z, 1));
  r.x_normal = is_normal(g, cx);
  r.z_normal = is_normal(g, cz);
  r.core_x_order = core_of(g, cx).order();
  r.core_z_order = core_of(g, cz).order();
  r.h_semidihedral = semidihedral_relations(g, gens.x, gens.y, h.order());
  r.k_semidihedral = semidihedral_relations(g, gens.z, gens.w, k.order());
  return r;
}

}  // namespace zsp
