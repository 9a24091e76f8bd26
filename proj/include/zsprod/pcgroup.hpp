#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zsprod/arith.hpp"
#include "zsprod/congruence.hpp"

namespace zsp {

/// An element of the abelian subgroup A = <z> x <x>, written z^z x^x.
struct AElem {
  Residue z = 0;
  Residue x = 0;

  friend bool operator==(const AElem&, const AElem&) = default;
};

/// w^w y^y z^z x^x with w, y in {0,1}, z in [0, M), x in [0, N).
struct NormalForm {
  Residue w = 0;
  Residue y = 0;
  Residue z = 0;
  Residue x = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Polycyclic presentation on g1 = w, g2 = y, g3 = z, g4 = x with relative
/// orders (2, 2, M, N), trivial power relations and [x, z] = 1.  Each field
/// is the right-hand side of one conjugate relation.
struct PcData {
  SdPair pair;
  AElem y_by_w;      // y^w = y * z^c x^t
  Residue z_by_w{};  // z^w = z^beta
  AElem x_by_w;      // x^w = z^b x^{1+s}
  AElem z_by_y;      // z^y = z^{1+a} x^r
  Residue x_by_y{};  // x^y = x^alpha

  friend bool operator==(const PcData&, const PcData&) = default;
};

/// Generator positions in the polycyclic series, 1-based as g1..g4.
enum class Gen : unsigned { w = 1, y = 2, z = 3, x = 4 };

PcData pc_from_tuple_a(const SdPair& pair, const TupleA& t);
PcData pc_from_tuple_b(const SdPair& pair, const TupleB& t);

NormalForm generator(Gen g) noexcept;

/// Normal form of u * v.  v's w-part is moved left through u's tail first,
/// then its y-part; the remaining A-parts are added.
NormalForm collect_multiply(const PcData& pc, const NormalForm& u,
                            const NormalForm& v);

enum class Family { P, W, C };

std::string_view to_string(Family f);

struct ConsistencyEntry {
  Family family;
  std::array<unsigned, 3> index;  // (i, j) or (i, j, k); unused slots are 0
  bool passed;
  AElem residual;  // lhs minus rhs, componentwise on the A-part
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;

  bool overall() const noexcept;
};

/// Evaluates the 6 (P), 6 (W) and 4 (C) overlap identities by iterating the
/// conjugate relations; power relations are only used through exponent
/// reduction inside the cyclic factors.
ConsistencyReport check_consistency(const PcData& pc);

struct TableOptions {
  /// Largest group order build_table() will materialize.
  std::size_t max_order = 4096;
  unsigned workers = 1;
};

using ElementIndex = std::uint32_t;

/// A fully materialized finite group.  Index 0 is the identity.
class GroupTable {
 public:
  struct Generators {
    ElementIndex w = 0, y = 0, z = 0, x = 0;
  };

  GroupTable() = default;

  /// Wraps raw data without validation; build_table() is the checked path.
  GroupTable(std::size_t order, std::vector<ElementIndex> product,
             std::vector<NormalForm> labels, Generators gens);

  std::size_t order() const noexcept { return order_; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    return product_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementIndex inverse(ElementIndex a) const noexcept { return inverse_[a]; }
  std::span<const ElementIndex> row(ElementIndex a) const noexcept {
    return {product_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const ElementIndex> product() const noexcept { return product_; }
  const NormalForm& label(ElementIndex a) const noexcept { return labels_[a]; }
  const Generators& generators() const noexcept { return gens_; }

  ElementIndex power(ElementIndex a, std::uint64_t e) const noexcept;
  std::uint64_t element_order(ElementIndex a) const noexcept;

 private:
  std::size_t order_ = 0;
  std::vector<ElementIndex> product_;
  std::vector<ElementIndex> inverse_;
  std::vector<NormalForm> labels_;
  Generators gens_;
};

/// index = ((w*2 + y)*M + z)*N + x
ElementIndex index_of(const SdPair& pair, const NormalForm& nf) noexcept;
NormalForm normal_form_at(const SdPair& pair, ElementIndex index) noexcept;

/// Throws inconsistent_presentation or table_too_large.
GroupTable build_table(const PcData& pc, const TableOptions& opts = {});

/// True iff every row and every column of the product table is a permutation.
bool is_latin_square(const GroupTable& g);

struct SubgroupHandle {
  std::vector<ElementIndex> elements;  // sorted
  std::vector<ElementIndex> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(ElementIndex e) const noexcept;
};

SubgroupHandle subgroup_closure(const GroupTable& g,
                                std::span<const ElementIndex> generators);
bool is_normal(const GroupTable& g, const SubgroupHandle& h);
/// Intersection of all conjugates of h.
SubgroupHandle core_of(const GroupTable& g, const SubgroupHandle& h);

struct AssociativityOptions {
  std::size_t max_order = 512;
  unsigned workers = 1;
};

/// Cubic scan of (ab)c = a(bc).  Throws table_too_large above max_order.
bool verify_associativity_exhaustive(const GroupTable& g,
                                     const AssociativityOptions& opts = {});

/// Summary of the factorization G = HK with H = <x, y>, K = <z, w>.
struct FactorizationReport {
  std::size_t order = 0;
  std::size_t h_order = 0;
  std::size_t k_order = 0;
  std::size_t intersection_order = 0;
  bool x_normal = false;
  bool z_normal = false;
  std::size_t core_x_order = 0;
  std::size_t core_z_order = 0;
  bool h_semidihedral = false;
  bool k_semidihedral = false;
};

FactorizationReport analyze_factorization(const GroupTable& g);

}  // namespace zsp
