#pragma once

#include <cstdint>
#include <vector>

#include "zsprod/error.hpp"

namespace zsp {

/// A residue in Z/2^k, always stored reduced into [0, 2^k).
using Residue = std::uint64_t;

inline constexpr unsigned kMinRank = 4;
inline constexpr unsigned kDefaultRankCap = 20;

/// Ambient parameters of a pair SD_{2^n}, SD_{2^m} and the constants derived
/// from them.  Built only through derive_pair(), so the invariants
/// N = 2^{n-1}, M = 2^{m-1}, alpha = 2^{n-2}-1, beta = 2^{m-2}-1 always hold.
struct SdPair {
  unsigned n = 0;
  unsigned m = 0;
  Residue N = 0;
  Residue M = 0;
  Residue alpha = 0;
  Residue beta = 0;

  friend bool operator==(const SdPair&, const SdPair&) = default;
};

/// Throws rank_too_small if n or m < 4, rank_too_large if either exceeds
/// `rank_cap` (default 20, which keeps 4NM and table indices in 64 bits).
SdPair derive_pair(unsigned n, unsigned m, unsigned rank_cap = kDefaultRankCap);

bool is_power_of_two(std::uint64_t v) noexcept;

/// Reduction into [0, modulus) for a power-of-two modulus.  Signed input is
/// handled with two's complement, which agrees with the mathematical residue.
constexpr Residue reduce(std::int64_t v, Residue modulus) noexcept {
  return static_cast<Residue>(v) & (modulus - 1);
}
constexpr Residue add_mod(Residue a, Residue b, Residue modulus) noexcept {
  return (a + b) & (modulus - 1);
}
constexpr Residue sub_mod(Residue a, Residue b, Residue modulus) noexcept {
  return (a - b) & (modulus - 1);
}
// Operands are below 2^20 in every supported configuration, so the 64-bit
// product cannot wrap before masking; wrapping would still be harmless since
// the modulus divides 2^64.
constexpr Residue mul_mod(Residue a, Residue b, Residue modulus) noexcept {
  return (a * b) & (modulus - 1);
}

/// The four square roots of unity modulo 2^{n-1}, sorted ascending.
std::vector<Residue> sqrt1_units(Residue modulus);

/// { u - 1 : u in sqrt1_units(modulus) }, sorted ascending.
std::vector<Residue> admissible_s_values(Residue modulus);

/// Least t > 0 with t*v = 0 mod modulus; additive_order(0, _) = 1.
Residue additive_order(Residue v, Residue modulus) noexcept;

}  // namespace zsp
