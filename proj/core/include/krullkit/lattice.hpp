#pragma once

// Finite distributive lattices, represented as the lattice of downsets of a
// finite poset (its join-irreducibles). Elements are bitsets over the poset
// points, so meet and join are single bit operations.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krullkit/limits.hpp"

namespace krullkit {

using PointSet = std::uint64_t;
inline constexpr std::size_t kMaxPosetPoints = 64;

/// A lattice element: the downset it denotes, as a bitset over poset points.
struct Elem {
  PointSet bits = 0;

  friend bool operator==(Elem, Elem) = default;
};

/// Canonical element order: popcount first, then numeric bitset value.
bool canonical_less(Elem a, Elem b) noexcept;

/// Finite poset given by a Hasse diagram. Construction checks acyclicity and
/// stores the transitive reduction, so redundant covers are dropped.
class Poset {
 public:
  Poset() = default;

  /// Throws InvalidInput on out-of-range indices, self-loops or cycles.
  static Poset from_covers(std::size_t size, std::span<const std::pair<std::uint32_t, std::uint32_t>> covers);
  static Poset chain(std::size_t size);
  static Poset antichain(std::size_t size);
  /// Disjoint union; points of `right` are shifted by left.size().
  static Poset disjoint_union(const Poset& left, const Poset& right);

  std::size_t size() const noexcept { return down_.size(); }
  /// Reduced cover pairs (lower, upper), sorted.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers() const noexcept { return covers_; }
  /// Bitset of points q with q <= p (p included).
  PointSet down_closure(std::size_t p) const { return down_[p]; }
  PointSet up_closure(std::size_t p) const { return up_[p]; }
  bool leq(std::size_t p, std::size_t q) const { return (down_[q] >> p) & 1u; }
  /// Points in an order where every point follows all points below it.
  const std::vector<std::uint32_t>& linear_extension() const noexcept { return linear_; }
  PointSet all_points() const noexcept;

 private:
  std::vector<PointSet> down_;
  std::vector<PointSet> up_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers_;
  std::vector<std::uint32_t> linear_;
};

class FiniteDistLattice {
 public:
  /// Birkhoff construction: all downsets of `poset`.
  static FiniteDistLattice from_poset(Poset poset, const Limits& limits = default_limits());

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// All elements in canonical order; index 0 is bottom, the last is top.
  std::span<const Elem> elements() const noexcept { return elements_; }
  Elem element(std::size_t index) const { return elements_.at(index); }

  Elem bottom() const noexcept { return Elem{0}; }
  Elem top() const noexcept { return Elem{poset_.all_points()}; }
  bool is_trivial() const noexcept { return poset_.size() == 0; }

  Elem meet(Elem a, Elem b) const noexcept { return Elem{a.bits & b.bits}; }
  Elem join(Elem a, Elem b) const noexcept { return Elem{a.bits | b.bits}; }
  bool leq(Elem a, Elem b) const noexcept { return (a.bits & ~b.bits) == 0; }
  /// Big meet; the empty meet is top.
  Elem meet_all(std::span<const Elem> xs) const noexcept;
  /// Big join; the empty join is bottom.
  Elem join_all(std::span<const Elem> xs) const noexcept;
  /// A ⊢ B, i.e. ⋀A <= ⋁B.
  bool entails(std::span<const Elem> lhs, std::span<const Elem> rhs) const noexcept {
    return leq(meet_all(lhs), join_all(rhs));
  }

  /// Relative pseudo-complement: the largest c with c ∧ a <= b.
  Elem implies(Elem a, Elem b) const noexcept;
  Elem negation(Elem a) const noexcept { return implies(a, bottom()); }

  /// Principal downset of a poset point; these are the join-irreducibles.
  Elem principal(std::size_t point) const { return Elem{poset_.down_closure(point)}; }
  std::vector<Elem> join_irreducibles() const;

  bool contains(Elem a) const noexcept { return index_.contains(a.bits); }
  /// Throws InvalidInput when `a` is not a downset of the poset.
  std::size_t index_of(Elem a) const;

  /// External name: the bitset as a hex string, e.g. "0x5".
  static std::string name(Elem a);
  /// Parses "0x5" or "5" (hex digits); checks membership.
  Elem parse_name(std::string_view text) const;

 private:
  FiniteDistLattice(Poset poset, std::vector<Elem> elements);

  Poset poset_;
  std::vector<Elem> elements_;
  std::unordered_map<PointSet, std::uint32_t> index_;
};

/// Same as FiniteDistLattice::from_poset.
FiniteDistLattice lattice_from_poset(Poset poset, const Limits& limits = default_limits());

/// The k-element chain 0 < ... < 1. Throws InvalidInput for k = 0.
FiniteDistLattice chain_lattice(std::size_t k, const Limits& limits = default_limits());
/// The Boolean algebra with 2^n elements.
FiniteDistLattice boolean_lattice(std::size_t n, const Limits& limits = default_limits());
/// Componentwise product L1 × L2 (downsets of the disjoint union).
FiniteDistLattice product(const FiniteDistLattice& left, const FiniteDistLattice& right,
                          const Limits& limits = default_limits());
/// Embeds a pair into product(left, right); matches the shift of Poset::disjoint_union.
Elem product_pair(const FiniteDistLattice& left, Elem a, Elem b);

/// Result of importing a lattice given extensionally: the lattice in downset
/// form plus the image of each input element.
struct ImportedLattice {
  FiniteDistLattice lattice;
  std::vector<Elem> image;
};

/// Converts a finite distributive lattice given by its order relation on
/// `count` items. The order must already be known to be a distributive lattice;
/// throws InvalidInput otherwise.
ImportedLattice lattice_from_order(std::size_t count,
                                   const std::function<bool(std::size_t, std::size_t)>& leq,
                                   const Limits& limits = default_limits());

/// Checks every lattice law and both distributive laws on all triples of the
/// given operation tables, then converts to downset form. Throws
/// LatticeAxiomError naming the failing law and triple.
ImportedLattice validate_raw_lattice(const std::vector<std::vector<std::size_t>>& meet,
                                     const std::vector<std::vector<std::size_t>>& join,
                                     const Limits& limits = default_limits());

/// A point of Spec(L): a morphism L → 2, kept as its kernel.
struct PrimeIdealPoint {
  /// The poset point p with φ(a) = 1 iff p ∈ a.
  std::uint32_t point = 0;
  /// kernel[i] is true iff element i (canonical index) maps to 0.
  std::vector<bool> kernel;

  bool in_kernel(std::size_t element_index) const { return kernel.at(element_index); }
};

/// All morphisms L → 2, ordered by reverse inclusion of kernels (larger
/// kernels first, ties by point index).
std::vector<PrimeIdealPoint> spec_enumerate(const FiniteDistLattice& lattice);

/// Free-function spelling of FiniteDistLattice::implies.
inline Elem heyting_implies(const FiniteDistLattice& lattice, Elem a, Elem b) {
  return lattice.implies(a, b);
}

}  // namespace krullkit
