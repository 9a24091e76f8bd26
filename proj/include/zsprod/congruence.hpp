#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "zsprod/arith.hpp"

namespace zsp {

/// Parameters of [z,y] = z^a, [x,w] = x^s, [y,w] = x^t z^c with both cyclic
/// factors normal.  a, c live in Z_M and s, t in Z_N.
struct TupleA {
  Residue a = 0;
  Residue s = 0;
  Residue t = 0;
  Residue c = 0;

  friend auto operator<=>(const TupleA&, const TupleA&) = default;
};

/// Requested cores <x^{n1}> and <z^{m1}>.
struct CoreSpec {
  Residue n1 = 1;
  Residue m1 = 1;

  friend auto operator<=>(const CoreSpec&, const CoreSpec&) = default;
};

/// Parameters of [z,y] = x^r z^a, [x,w] = x^s z^b, [y,w] = x^t z^c.
/// r, s, t live in Z_N and a, b, c in Z_M.
struct TupleB {
  Residue r = 0;
  Residue a = 0;
  Residue s = 0;
  Residue b = 0;
  Residue t = 0;
  Residue c = 0;

  friend auto operator<=>(const TupleB&, const TupleB&) = default;
};

enum class Condition {
  C1, C2, C3, C4, C5, C6,
  D1, D2, D3, D4, D5, D6, D7, D8, D9, D10, D11, D12,
  OrdR, OrdB,
};

std::string_view to_string(Condition c);

/// One violated condition.  For congruences `residual` is the value of the
/// left-hand side in its ring; for OrdR/OrdB it is the actual additive order.
struct Failure {
  Condition condition;
  Residue residual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Verdict {
  std::vector<Failure> failed;

  bool valid() const noexcept { return failed.empty(); }
  bool fails(Condition c) const noexcept;
};

TupleA make_tuple_a(const SdPair& pair, std::int64_t a, std::int64_t s,
                    std::int64_t t, std::int64_t c);
TupleB make_tuple_b(const SdPair& pair, std::int64_t r, std::int64_t a,
                    std::int64_t s, std::int64_t b, std::int64_t t,
                    std::int64_t c);

/// Embeds a TupleA as (0, a, s, 0, t, c).
TupleB widen(const TupleA& t) noexcept;
/// Drops r and b.
TupleA project(const TupleB& t) noexcept;

/// Throws invalid_core_spec unless n1 | N, m1 | M and both are powers of two.
void validate_cores(const SdPair& pair, const CoreSpec& cores);

/// Left-hand side of a congruence, reduced into its ring (zero means it
/// holds).  Only defined for C1..C6 and D1..D12.
Residue residual(const SdPair& pair, const TupleB& t, Condition c);

Verdict check_a(const SdPair& pair, const TupleA& t);

/// (D1)-(D12) only, without the additive-order side conditions.
Verdict check_d(const SdPair& pair, const TupleB& t);

/// (D1)-(D12) plus additive_order(r, N) = m1 and additive_order(b, M) = n1.
Verdict check_b(const SdPair& pair, const CoreSpec& cores, const TupleB& t);

struct EnumerationOptions {
  unsigned workers = 1;
  /// Required for enumerate_b above (n, m) = (5, 5).
  bool allow_large = false;
};

/// All valid TupleA in lexicographic (a, s, t, c) order.
std::vector<TupleA> enumerate_a(const SdPair& pair,
                                const EnumerationOptions& opts = {});

/// All valid TupleB in lexicographic (r, a, s, b, t, c) order.
std::vector<TupleB> enumerate_b(const SdPair& pair, const CoreSpec& cores,
                                const EnumerationOptions& opts = {});

/// True iff every field of every tuple is even.
bool parity_audit(const SdPair& pair, const std::vector<TupleA>& tuples);

}  // namespace zsp
