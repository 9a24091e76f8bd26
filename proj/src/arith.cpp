#include "zsprod/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace zsp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::rank_too_small: return "rank-too-small";
    case ErrorKind::rank_too_large: return "rank-too-large";
    case ErrorKind::modulus_not_power_of_two: return "modulus-not-power-of-two";
    case ErrorKind::modulus_too_small: return "modulus-too-small";
    case ErrorKind::invalid_core_spec: return "invalid-core-spec";
    case ErrorKind::enumeration_too_large: return "enumeration-too-large";
    case ErrorKind::inconsistent_presentation: return "inconsistent-presentation";
    case ErrorKind::table_too_large: return "table-too-large";
    case ErrorKind::coset_limit_exceeded: return "coset-limit-exceeded";
    case ErrorKind::incomplete_table: return "incomplete-table";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown-error";
}

SdPair derive_pair(unsigned n, unsigned m, unsigned rank_cap) {
  if (n < kMinRank || m < kMinRank) {
    throw Error(ErrorKind::rank_too_small,
                "ranks must be at least 4 (got n=" + std::to_string(n) +
                    ", m=" + std::to_string(m) + ")");
  }
  if (n > rank_cap || m > rank_cap) {
    throw Error(ErrorKind::rank_too_large,
                "ranks are capped at " + std::to_string(rank_cap) +
                    " (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  SdPair p;
  p.n = n;
  p.m = m;
  p.N = Residue{1} << (n - 1);
  p.M = Residue{1} << (m - 1);
  p.alpha = (Residue{1} << (n - 2)) - 1;
  p.beta = (Residue{1} << (m - 2)) - 1;
  return p;
}

bool is_power_of_two(std::uint64_t v) noexcept { return std::has_single_bit(v); }

namespace {

void require_sd_modulus(Residue modulus) {
  if (!is_power_of_two(modulus)) {
    throw Error(ErrorKind::modulus_not_power_of_two,
                "modulus " + std::to_string(modulus) + " is not a power of two");
  }
  if (modulus < 8) {
    throw Error(ErrorKind::modulus_too_small,
                "modulus " + std::to_string(modulus) + " is below 8");
  }
}

}  // namespace

std::vector<Residue> sqrt1_units(Residue modulus) {
  require_sd_modulus(modulus);
  const Residue half = modulus / 2;
  std::vector<Residue> roots{1, half + 1, modulus - 1, half - 1};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Residue> admissible_s_values(Residue modulus) {
  auto roots = sqrt1_units(modulus);
  for (auto& u : roots) u = sub_mod(u, 1, modulus);
  return roots;
}

Residue additive_order(Residue v, Residue modulus) noexcept {
  return modulus / std::gcd(modulus, v % modulus);
}

}  // namespace zsp
