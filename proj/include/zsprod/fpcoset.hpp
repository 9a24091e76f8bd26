#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsprod/arith.hpp"
#include "zsprod/congruence.hpp"

namespace zsp {

/// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

/// Canonical generator names, in polycyclic order.
inline constexpr std::string_view kGeneratorNames = "wyzx";

struct FpPres {
  /// One lowercase name per generator; generator g is generators[g].
  std::string generators;
  std::vector<Word> relators;
};

Word free_reduce(Word w);

/// Index of a named generator, if the presentation has it.
std::optional<std::size_t> generator_index(const FpPres& fp, char name);

/// The ten relators
///   x^N, y^2, z^M, w^2, [x^y = x^alpha], [z^w = z^beta],
///   [x,z](x^e1 z^e2)^-1, [z,y](x^r z^a)^-1, [x,w](x^s z^b)^-1, [y,w](x^t z^c)^-1
/// on generators w, y, z, x, each freely reduced.
FpPres fp_from_extended(const SdPair& pair, const TupleB& t, Residue e1, Residue e2);

/// Order-16 semidihedral group on y, x alone.
FpPres semidihedral_presentation(unsigned n);

/// The order-256 product with [x,z] = x^2 z^2, [z,y] = x^4, [x,w] = z^4,
/// [y,w] = 1 on two copies of SD_16.
FpPres nonabelian_commutator_example();

/// One relator per line; tokens are w y z x (inverses W Y Z X) with an
/// optional ^k repetition.  '#' starts a comment.  The generator list is the
/// set of letters that occur, in w, y, z, x order.
FpPres parse_relators(std::string_view text);

/// Inverse of parse_relators for a single word, e.g. "X Z x z Z Z X X".
std::string format_word(const FpPres& fp, const Word& w);

class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t generator_count, std::vector<std::int32_t> entries,
             bool complete, std::size_t defined_total);

  std::size_t generator_count() const noexcept { return gens_; }
  std::size_t columns() const noexcept { return 2 * gens_; }
  std::size_t cosets() const noexcept { return gens_ ? entries_.size() / columns() : 0; }
  bool complete() const noexcept { return complete_; }
  /// Cosets defined over the whole run, including ones later merged away.
  std::size_t defined_total() const noexcept { return defined_total_; }

  /// Coset reached from `coset` by generator g (inverse = false) or g^-1.
  std::int32_t act(std::size_t coset, std::size_t g, bool inverse = false) const noexcept {
    return entries_[coset * columns() + 2 * g + (inverse ? 1 : 0)];
  }
  /// Traces a word from a coset; -1 if some step is undefined.
  std::int32_t trace(std::size_t coset, std::span<const Letter> w) const noexcept;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t gens_ = 0;
  std::vector<std::int32_t> entries_;
  bool complete_ = false;
  std::size_t defined_total_ = 0;
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Todd-Coxeter enumeration over the trivial subgroup (HLT strategy).
/// Returns a complete table whose cosets are renumbered in breadth-first
/// order from coset 0.  Throws coset_limit_exceeded if more than max_cosets
/// cosets would have to be defined.
CosetTable coset_enumerate(const FpPres& fp, std::size_t max_cosets = kDefaultMaxCosets);

/// True iff every relator closes at every coset and every entry is defined.
bool audit_table(const CosetTable& table, const FpPres& fp);

/// Permutation of {0..n-1} acting on the right: (k)(p q) = ((k)p)q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t k) const noexcept { return images_[k]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// this, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(std::uint64_t e) const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// One permutation of the cosets per generator.
std::vector<Permutation> regular_representation(const CosetTable& table);

/// All elements of <generators>, breadth-first from the identity.
std::vector<Permutation> permutation_closure(std::size_t degree,
                                             std::span<const Permutation> generators);

struct StructureReport {
  std::size_t order = 0;
  std::optional<std::uint64_t> order_w, order_y, order_z, order_x;
  std::optional<std::size_t> order_h;  // |<x, y>|
  std::optional<std::size_t> order_k;  // |<z, w>|
  std::optional<std::size_t> order_h_cap_k;
  std::optional<bool> h_semidihedral;
  std::optional<bool> k_semidihedral;
  std::optional<bool> xz_trivial;
  /// [x, z] = x^e1 z^e2 with (e1, e2) lexicographically least, when it lies
  /// in <x><z>.
  std::optional<std::pair<Residue, Residue>> xz_exponents;
  std::optional<std::size_t> core_x_order;
  std::optional<std::size_t> core_z_order;
};

/// Throws incomplete_table unless the table is complete.
StructureReport structure_report(const CosetTable& table, const FpPres& fp);

/// Cores (n1, m1) with <x>^G = <x^{n1}> and <z>^G = <z^{m1}>, read off the
/// computed element and core orders.
std::optional<CoreSpec> cores_from_report(const StructureReport& report);

/// True iff [x, z] lies in <x^{n1}> <z^{m1}>.
bool verify_xz_commutator_location(const StructureReport& report, const CoreSpec& cores);

/// Requires (D1)-(D12); coset count of the presentation with [x, z] = 1.
std::size_t enumerated_order(const SdPair& pair, const TupleB& t,
                             std::size_t max_cosets = kDefaultMaxCosets);

/// enumerated_order(...) == 4NM.
bool crosscheck_order(const SdPair& pair, const TupleB& t,
                      std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace zsp
