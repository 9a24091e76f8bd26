#include "zsprod/congruence.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <thread>

namespace zsp {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
    case Condition::C5: return "C5";
    case Condition::C6: return "C6";
    case Condition::D1: return "D1";
    case Condition::D2: return "D2";
    case Condition::D3: return "D3";
    case Condition::D4: return "D4";
    case Condition::D5: return "D5";
    case Condition::D6: return "D6";
    case Condition::D7: return "D7";
    case Condition::D8: return "D8";
    case Condition::D9: return "D9";
    case Condition::D10: return "D10";
    case Condition::D11: return "D11";
    case Condition::D12: return "D12";
    case Condition::OrdR: return "ORD-R";
    case Condition::OrdB: return "ORD-B";
  }
  return "?";
}

bool Verdict::fails(Condition c) const noexcept {
  return std::any_of(failed.begin(), failed.end(),
                     [c](const Failure& f) { return f.condition == c; });
}

TupleA make_tuple_a(const SdPair& pair, std::int64_t a, std::int64_t s,
                    std::int64_t t, std::int64_t c) {
  return {reduce(a, pair.M), reduce(s, pair.N), reduce(t, pair.N), reduce(c, pair.M)};
}

TupleB make_tuple_b(const SdPair& pair, std::int64_t r, std::int64_t a,
                    std::int64_t s, std::int64_t b, std::int64_t t,
                    std::int64_t c) {
  return {reduce(r, pair.N), reduce(a, pair.M), reduce(s, pair.N),
          reduce(b, pair.M), reduce(t, pair.N), reduce(c, pair.M)};
}

TupleB widen(const TupleA& t) noexcept { return {0, t.a, t.s, 0, t.t, t.c}; }

TupleA project(const TupleB& t) noexcept { return {t.a, t.s, t.t, t.c}; }

void validate_cores(const SdPair& pair, const CoreSpec& cores) {
  const bool ok = is_power_of_two(cores.n1) && is_power_of_two(cores.m1) &&
                  cores.n1 <= pair.N && cores.m1 <= pair.M;
  if (!ok) {
    throw Error(ErrorKind::invalid_core_spec,
                "cores (n1=" + std::to_string(cores.n1) + ", m1=" +
                    std::to_string(cores.m1) + ") must be powers of two dividing N=" +
                    std::to_string(pair.N) + " and M=" + std::to_string(pair.M));
  }
}

Residue residual(const SdPair& pair, const TupleB& t, Condition c) {
  const Residue N = pair.N, M = pair.M;
  const Residue al = pair.alpha, be = pair.beta;
  // Exponents acting on z are taken mod M and those acting on x mod N; alpha
  // and beta enter as the integers 2^{n-2}-1 and 2^{m-2}-1.
  const auto sq_minus_one = [](Residue u, Residue mod) {
    return sub_mod(mul_mod(u, u, mod), 1, mod);
  };
  switch (c) {
    case Condition::C1:
    case Condition::D2:
      return sq_minus_one(1 + t.a, M);
    case Condition::C2:
    case Condition::D3:
      return sq_minus_one(1 + t.s, N);
    case Condition::C3:
    case Condition::D9:
      return mul_mod(t.t, 2 + t.s, N);
    case Condition::C4:
      return mul_mod(t.c, 1 + be, M);
    case Condition::C5:
      return mul_mod(t.t, 1 + al, N);
    case Condition::C6:
    case Condition::D12:
      return mul_mod(t.c, 2 + t.a, M);
    case Condition::D1:
      return mul_mod(t.r, al + 1 + t.a, N);
    case Condition::D4:
      return mul_mod(t.b, 1 + t.s + be, M);
    case Condition::D5:
      return mul_mod(t.r, sub_mod(be, 1 + t.s, N), N);
    case Condition::D6:
      return mul_mod(t.b, t.r, M);
    case Condition::D7:
      return mul_mod(t.b, sub_mod(al, 1 + t.a, M), M);
    case Condition::D8:
      return mul_mod(t.r, t.b, N);
    case Condition::D10:
      return add_mod(mul_mod(t.c, 1 + be, M), mul_mod(t.t, t.b, M), M);
    case Condition::D11:
      return add_mod(mul_mod(t.t, 1 + al, N), mul_mod(t.c, t.r, N), N);
    case Condition::OrdR:
    case Condition::OrdB:
      break;
  }
  throw Error(ErrorKind::precondition_violated,
              "residual() is undefined for " + std::string(to_string(c)));
}

namespace {

constexpr Condition kConditionsA[] = {Condition::C1, Condition::C2, Condition::C3,
                                      Condition::C4, Condition::C5, Condition::C6};
constexpr Condition kConditionsD[] = {
    Condition::D1, Condition::D2, Condition::D3, Condition::D4,
    Condition::D5, Condition::D6, Condition::D7, Condition::D8,
    Condition::D9, Condition::D10, Condition::D11, Condition::D12};

void collect_failures(const SdPair& pair, const TupleB& t,
                      std::span<const Condition> conds, Verdict& v) {
  for (Condition c : conds) {
    const Residue res = residual(pair, t, c);
    if (res != 0) v.failed.push_back({c, res});
  }
}

bool all_hold(const SdPair& pair, const TupleB& t,
              std::initializer_list<Condition> conds) {
  for (Condition c : conds) {
    if (residual(pair, t, c) != 0) return false;
  }
  return true;
}

// Runs body(outer) for outer in [0, count) over `workers` threads and
// concatenates the per-outer results in ascending outer order.
template <typename T, typename Body>
std::vector<T> partitioned(Residue count, unsigned workers, Body body) {
  std::vector<std::vector<T>> parts(count);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (Residue i = 0; i < count; ++i) parts[i] = body(i);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Residue i = w; i < count; i += workers) parts[i] = body(i);
      });
    }
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Verdict check_a(const SdPair& pair, const TupleA& t) {
  Verdict v;
  collect_failures(pair, widen(t), kConditionsA, v);
  return v;
}

Verdict check_d(const SdPair& pair, const TupleB& t) {
  Verdict v;
  collect_failures(pair, t, kConditionsD, v);
  return v;
}

Verdict check_b(const SdPair& pair, const CoreSpec& cores, const TupleB& t) {
  validate_cores(pair, cores);
  Verdict v = check_d(pair, t);
  if (const Residue ord = additive_order(t.r, pair.N); ord != cores.m1) {
    v.failed.push_back({Condition::OrdR, ord});
  }
  if (const Residue ord = additive_order(t.b, pair.M); ord != cores.n1) {
    v.failed.push_back({Condition::OrdB, ord});
  }
  return v;
}

std::vector<TupleA> enumerate_a(const SdPair& pair, const EnumerationOptions& opts) {
  using C = Condition;
  // Each condition is tested as soon as the variables it mentions are bound.
  return partitioned<TupleA>(pair.M, opts.workers, [&](Residue a) {
    std::vector<TupleA> out;
    TupleB t{};
    t.a = a;
    if (!all_hold(pair, t, {C::C1})) return out;
    for (t.s = 0; t.s < pair.N; ++t.s) {
      if (!all_hold(pair, t, {C::C2})) continue;
      for (t.t = 0; t.t < pair.N; ++t.t) {
        if (!all_hold(pair, t, {C::C3, C::C5})) continue;
        for (t.c = 0; t.c < pair.M; ++t.c) {
          if (all_hold(pair, t, {C::C4, C::C6})) out.push_back(project(t));
        }
      }
    }
    return out;
  });
}

std::vector<TupleB> enumerate_b(const SdPair& pair, const CoreSpec& cores,
                                const EnumerationOptions& opts) {
  validate_cores(pair, cores);
  if ((pair.n > 5 || pair.m > 5) && !opts.allow_large) {
    throw Error(ErrorKind::enumeration_too_large,
                "the six-parameter scan above (n, m) = (5, 5) needs an explicit opt-in");
  }
  using C = Condition;
  return partitioned<TupleB>(pair.N, opts.workers, [&](Residue r) {
    std::vector<TupleB> out;
    if (additive_order(r, pair.N) != cores.m1) return out;
    TupleB t{};
    t.r = r;
    for (t.a = 0; t.a < pair.M; ++t.a) {
      if (!all_hold(pair, t, {C::D1, C::D2})) continue;
      for (t.s = 0; t.s < pair.N; ++t.s) {
        if (!all_hold(pair, t, {C::D3, C::D5})) continue;
        for (t.b = 0; t.b < pair.M; ++t.b) {
          if (additive_order(t.b, pair.M) != cores.n1) continue;
          if (!all_hold(pair, t, {C::D4, C::D6, C::D7, C::D8})) continue;
          for (t.t = 0; t.t < pair.N; ++t.t) {
            if (!all_hold(pair, t, {C::D9})) continue;
            for (t.c = 0; t.c < pair.M; ++t.c) {
              if (all_hold(pair, t, {C::D10, C::D11, C::D12})) out.push_back(t);
            }
          }
        }
      }
    }
    return out;
  });
}

bool parity_audit(const SdPair& /*pair*/, const std::vector<TupleA>& tuples) {
  const auto even = [](Residue v) { return v % 2 == 0; };
  return std::all_of(tuples.begin(), tuples.end(), [&](const TupleA& t) {
    return even(t.a) && even(t.s) && even(t.t) && even(t.c);
  });
}

}  // namespace zsp
