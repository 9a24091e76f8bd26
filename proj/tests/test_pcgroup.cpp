#include <doctest.h>

#include <random>

#include "zsprod/congruence.hpp"
#include "zsprod/error.hpp"
#include "zsprod/pcgroup.hpp"

using namespace zsp;

namespace {

NormalForm nf(Residue w, Residue y, Residue z, Residue x) { return {w, y, z, x}; }

ElementIndex gen_index(const SdPair& p, Gen g) { return index_of(p, generator(g)); }

}  // namespace

TEST_CASE("collection examples") {
  const auto p = derive_pair(4, 4);
  const auto pc = pc_from_tuple_a(p, TupleA{0, 2, 0, 0});
  const auto x = generator(Gen::x);
  const auto w = generator(Gen::w);
  const auto y = generator(Gen::y);
  const auto z = generator(Gen::z);

  // x w = w x^w = w x^3
  CHECK(collect_multiply(pc, x, w) == nf(1, 0, 0, 3));
  // x y = y x^alpha
  CHECK(collect_multiply(pc, x, y) == nf(0, 1, 0, 3));
  // z w = w z^beta
  CHECK(collect_multiply(pc, z, w) == nf(1, 0, 3, 0));
  // w * w = 1, y * y = 1
  CHECK(collect_multiply(pc, w, w) == NormalForm{});
  CHECK(collect_multiply(pc, y, y) == NormalForm{});
  // y w = w y^w = w y
  CHECK(collect_multiply(pc, y, w) == nf(1, 1, 0, 0));
}

TEST_CASE("collection with nonzero r, b") {
  const auto p = derive_pair(4, 4);
  const auto pc = pc_from_tuple_b(p, TupleB{4, 0, 0, 4, 0, 0});
  // z^y = z x^4, x^w = z^4 x
  CHECK(collect_multiply(pc, generator(Gen::z), generator(Gen::y)) == nf(0, 1, 1, 4));
  CHECK(collect_multiply(pc, generator(Gen::x), generator(Gen::w)) == nf(1, 0, 4, 1));
}

TEST_CASE("index round trip") {
  const auto p = derive_pair(4, 5);
  for (ElementIndex i = 0; i < 4 * p.N * p.M; ++i) {
    CHECK(index_of(p, normal_form_at(p, i)) == i);
  }
  CHECK(index_of(p, NormalForm{}) == 0);
}

TEST_CASE("consistency report shape and the C1 witness") {
  const auto p = derive_pair(4, 4);
  const auto good = check_consistency(pc_from_tuple_a(p, TupleA{0, 2, 0, 0}));
  CHECK(good.entries.size() == 16);
  CHECK(good.overall());

  const auto bad = check_consistency(pc_from_tuple_a(p, TupleA{1, 0, 0, 0}));
  CHECK_FALSE(bad.overall());
  std::size_t failures = 0;
  for (const auto& e : bad.entries) {
    if (e.passed) continue;
    ++failures;
    CHECK(e.family == Family::P);
    CHECK(e.index[0] == 2);
    CHECK(e.index[1] == 3);
    CHECK(e.residual == AElem{3, 0});
  }
  CHECK(failures == 1);
}

TEST_CASE("consistency agrees with check_a on every tuple") {
  for (auto [n, m] : {std::pair{4u, 4u}, {4, 5}, {5, 4}}) {
    CAPTURE(n);
    CAPTURE(m);
    const auto p = derive_pair(n, m);
    std::size_t disagreements = 0, valid = 0;
    for (Residue a = 0; a < p.M; ++a)
      for (Residue s = 0; s < p.N; ++s)
        for (Residue t = 0; t < p.N; ++t)
          for (Residue c = 0; c < p.M; ++c) {
            const TupleA ta{a, s, t, c};
            const bool lhs = check_a(p, ta).valid();
            valid += lhs;
            disagreements += lhs != check_consistency(pc_from_tuple_a(p, ta)).overall();
          }
    CHECK(disagreements == 0);
    CHECK(valid == enumerate_a(p).size());
  }
}

TEST_CASE("consistency agrees with D1-D12 on every six-parameter tuple at (4,4)") {
  const auto p = derive_pair(4, 4);
  std::size_t disagreements = 0, consistent = 0;
  for (Residue r = 0; r < p.N; ++r)
    for (Residue a = 0; a < p.M; ++a)
      for (Residue s = 0; s < p.N; ++s)
        for (Residue b = 0; b < p.M; ++b)
          for (Residue t = 0; t < p.N; ++t)
            for (Residue c = 0; c < p.M; ++c) {
              const TupleB tb{r, a, s, b, t, c};
              const bool rhs = check_consistency(pc_from_tuple_b(p, tb)).overall();
              consistent += rhs;
              disagreements += check_d(p, tb).valid() != rhs;
            }
  CHECK(disagreements == 0);
  CHECK(consistent == 880);
}

TEST_CASE("at unequal ranks consistency also needs bN = 0 mod M and rM = 0 mod N") {
  for (auto [n, m] : {std::pair{4u, 5u}, {5, 4}}) {
    const auto p = derive_pair(n, m);
    std::mt19937_64 rng(7);
    std::size_t disagreements = 0, hits = 0;
    for (int i = 0; i < 200000; ++i) {
      const TupleB tb{rng() % p.N, rng() % p.M, rng() % p.N,
                      rng() % p.M, rng() % p.N, rng() % p.M};
      const bool extra = mul_mod(tb.b, p.N, p.M) == 0 && mul_mod(tb.r, p.M, p.N) == 0;
      const bool predicted = check_d(p, tb).valid() && extra;
      const bool consistent = check_consistency(pc_from_tuple_b(p, tb)).overall();
      hits += consistent;
      disagreements += predicted != consistent;
    }
    CHECK(disagreements == 0);
    CHECK(hits > 0);
    // Every tuple the core-aware enumerator returns satisfies both extras.
    for (CoreSpec cores : {CoreSpec{1, 1}, CoreSpec{2, 2}, CoreSpec{2, 1}, CoreSpec{1, 2}}) {
      for (const auto& tb : enumerate_b(p, cores)) {
        CHECK(check_consistency(pc_from_tuple_b(p, tb)).overall());
      }
    }
  }
}

TEST_CASE("build_table for the order-256 witness") {
  const auto p = derive_pair(4, 4);
  const auto g = build_table(pc_from_tuple_a(p, TupleA{0, 2, 0, 0}));
  CHECK(g.order() == 256);
  CHECK(is_latin_square(g));
  CHECK(g.mul(0, 17) == 17);
  for (ElementIndex a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inverse(a)) == 0);
    CHECK(g.label(a) == normal_form_at(p, a));
  }
  const auto& gens = g.generators();
  CHECK(g.element_order(gens.w) == 2);
  CHECK(g.element_order(gens.y) == 2);
  CHECK(g.element_order(gens.z) == 8);
  CHECK(g.element_order(gens.x) == 8);
  CHECK(gens.x == gen_index(p, Gen::x));
  CHECK(g.power(gens.x, 9) == gens.x);

  const auto r = analyze_factorization(g);
  CHECK(r.order == 256);
  CHECK(r.h_order == 16);
  CHECK(r.k_order == 16);
  CHECK(r.intersection_order == 1);
  CHECK(r.x_normal);
  CHECK(r.z_normal);
  CHECK(r.h_semidihedral);
  CHECK(r.k_semidihedral);
}

TEST_CASE("build_table errors") {
  const auto p = derive_pair(4, 4);
  try {
    build_table(pc_from_tuple_a(p, TupleA{1, 0, 0, 0}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::inconsistent_presentation);
  }
  try {
    build_table(pc_from_tuple_a(p, TupleA{}), {.max_order = 255});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::table_too_large);
  }
}

TEST_CASE("factorization invariants for every six-congruence tuple at (4,4)") {
  const auto p = derive_pair(4, 4);
  for (const auto& t : enumerate_a(p)) {
    CAPTURE(t.a);
    CAPTURE(t.s);
    CAPTURE(t.t);
    CAPTURE(t.c);
    const auto g = build_table(pc_from_tuple_a(p, t));
    const auto r = analyze_factorization(g);
    CHECK(r.order == 256);
    CHECK(r.h_order == 16);
    CHECK(r.k_order == 16);
    CHECK(r.intersection_order == 1);
    CHECK(r.x_normal);
    CHECK(r.z_normal);
    CHECK(r.core_x_order == 8);
    CHECK(r.core_z_order == 8);
    CHECK(r.h_semidihedral);
    CHECK(r.k_semidihedral);
  }
}

TEST_CASE("core_of matches <x^n1> and <z^m1>") {
  const auto p = derive_pair(4, 4);
  for (CoreSpec cores : {CoreSpec{2, 2}, CoreSpec{2, 1}, CoreSpec{1, 4}, CoreSpec{4, 2},
                         CoreSpec{8, 1}, CoreSpec{1, 8}}) {
    const auto tuples = enumerate_b(p, cores);
    REQUIRE(!tuples.empty());
    for (std::size_t i = 0; i < tuples.size(); i += 7) {
      const auto g = build_table(pc_from_tuple_b(p, tuples[i]));
      const auto& gens = g.generators();
      const ElementIndex x = gens.x, z = gens.z;
      const auto cx = core_of(g, subgroup_closure(g, std::span(&x, 1)));
      const auto cz = core_of(g, subgroup_closure(g, std::span(&z, 1)));
      const ElementIndex xn = g.power(x, cores.n1), zm = g.power(z, cores.m1);
      CHECK(cx.elements == subgroup_closure(g, std::span(&xn, 1)).elements);
      CHECK(cz.elements == subgroup_closure(g, std::span(&zm, 1)).elements);
      CHECK(is_normal(g, cx));
      CHECK(is_normal(g, cz));
    }
  }
}

TEST_CASE("<w> is not normal in the witness group") {
  const auto p = derive_pair(4, 4);
  const auto g = build_table(pc_from_tuple_a(p, TupleA{0, 2, 0, 0}));
  const ElementIndex w = g.generators().w;
  const auto h = subgroup_closure(g, std::span(&w, 1));
  CHECK(h.order() == 2);
  CHECK_FALSE(is_normal(g, h));
  CHECK(core_of(g, h).order() == 1);
}

TEST_CASE("associativity scan") {
  const auto p = derive_pair(4, 4);
  const auto g = build_table(pc_from_tuple_a(p, TupleA{0, 2, 0, 0}));
  CHECK(verify_associativity_exhaustive(g, {.workers = 4}));

  // Swap two entries of one row: still a row permutation, no longer a group.
  std::vector<ElementIndex> product(g.product().begin(), g.product().end());
  std::swap(product[5 * 256 + 9], product[5 * 256 + 10]);
  std::vector<NormalForm> labels;
  for (ElementIndex i = 0; i < 256; ++i) labels.push_back(g.label(i));
  const GroupTable broken(256, std::move(product), std::move(labels), g.generators());
  CHECK_FALSE(is_latin_square(broken));
  CHECK_FALSE(verify_associativity_exhaustive(broken, {.workers = 2}));

  try {
    verify_associativity_exhaustive(g, {.max_order = 100});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::table_too_large);
  }
}

TEST_CASE("table build is independent of the worker count") {
  const auto p = derive_pair(4, 5);
  const auto pc = pc_from_tuple_a(p, enumerate_a(p)[17]);
  const auto a = build_table(pc, {.workers = 1});
  const auto b = build_table(pc, {.workers = 6});
  CHECK(std::equal(a.product().begin(), a.product().end(), b.product().begin(),
                   b.product().end()));
}
