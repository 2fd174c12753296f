#pragma once

// Entailment relations over finite generator sets and the distributive
// lattice they present.
//
// Finite subsets of generators are bitsets (`Subset`). An element of the
// presented lattice is a finite set of finite subsets {A1, ..., An}, read as
// ⋀A1 ∨ ... ∨ ⋀An.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "krullkit/lattice.hpp"
#include "krullkit/limits.hpp"

namespace krullkit {

using Subset = std::uint64_t;
inline constexpr std::size_t kMaxGenerators = 64;

/// Ordered, duplicate-free generator names. The order fixes every bitset.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws InvalidInput on duplicates or more than kMaxGenerators names.
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t index_of(std::string_view name) const;
  Subset subset(std::span<const std::string> names) const;
  Subset all() const noexcept;

 private:
  std::vector<std::string> names_;
};

/// A ⊢ B over generator bitsets.
struct Sequent {
  Subset lhs = 0;
  Subset rhs = 0;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct EntailmentAxioms {
  GeneratorSet generators;
  std::vector<Sequent> axioms;
};

/// Normal form: antichain under ⊇ (absorption drops supersets), sorted by
/// popcount then value. 0 is the empty set of conjuncts, 1 is {∅}.
class FreeLatticeElem {
 public:
  FreeLatticeElem() = default;
  static FreeLatticeElem normalize(std::vector<Subset> conjuncts);
  static FreeLatticeElem zero() { return {}; }
  static FreeLatticeElem one() { return normalize({Subset{0}}); }
  static FreeLatticeElem generator(std::size_t i) { return normalize({Subset{1} << i}); }
  /// ⋀A as an element.
  static FreeLatticeElem meet_of(Subset a) { return normalize({a}); }
  /// ⋁B as an element.
  static FreeLatticeElem join_of(Subset b);

  const std::vector<Subset>& conjuncts() const noexcept { return conjuncts_; }
  FreeLatticeElem join(const FreeLatticeElem& other) const;
  FreeLatticeElem meet(const FreeLatticeElem& other) const;

  friend bool operator==(const FreeLatticeElem&, const FreeLatticeElem&) = default;

 private:
  std::vector<Subset> conjuncts_;
};

/// The least entailment relation containing a set of axioms, saturated over
/// the full sequent space (4^|S| sequents) under reflexivity, monotonicity and
/// cut. Build once and query many times.
class SequentClosure {
 public:
  /// Throws ResourceLimit when |S| exceeds limits.max_closure_generators.
  explicit SequentClosure(const EntailmentAxioms& axioms, const Limits& limits = default_limits());

  bool entails(Sequent q) const;
  std::size_t generator_count() const noexcept { return n_; }

 private:
  std::size_t slot(Subset lhs, Subset rhs) const noexcept { return (lhs << n_) | rhs; }

  std::size_t n_ = 0;
  std::vector<bool> table_;
};

/// Decides q in the closure of the axioms (one-shot SequentClosure).
bool closure_decide(const EntailmentAxioms& axioms, Sequent q, const Limits& limits = default_limits());

/// The inductive relation A ≺ Y: either some B ∈ Y has B ⊆ A, or some axiom
/// A' ⊢ y1..ym with A' ⊆ A has A ∪ {yj} ≺ Y for every j. Memoized per call.
bool prec_decide(const EntailmentAxioms& axioms, Subset a, const FreeLatticeElem& y);

/// X ≤ Y in the presented lattice: A ≺ Y for every A ∈ X.
bool free_leq(const EntailmentAxioms& axioms, const FreeLatticeElem& x, const FreeLatticeElem& y);
bool free_equal(const EntailmentAxioms& axioms, const FreeLatticeElem& x, const FreeLatticeElem& y);

/// The presented lattice, materialized.
struct PresentedLattice {
  FiniteDistLattice lattice;
  /// Image of each generator.
  std::vector<Elem> generator_image;
  /// One normal-form representative per element, indexed like lattice.elements().
  std::vector<FreeLatticeElem> representatives;
};

/// Enumerates every normal form over the generators (antichains of subsets),
/// groups them by mutual ≤, and returns the quotient as a lattice. Throws
/// ResourceLimit beyond limits.max_enumeration_generators.
PresentedLattice free_lattice_enumerate(const EntailmentAxioms& axioms,
                                        const Limits& limits = default_limits());

/// a ≤ b in L/(J = 0, U = 1): a ∧ ⋀U ≤ b ∨ ⋁J. For finite J and U taking all
/// of them is enough, by monotonicity.
bool quotient_leq(const EntailmentAxioms& axioms, std::span<const FreeLatticeElem> j,
                  std::span<const FreeLatticeElem> u, const FreeLatticeElem& a,
                  const FreeLatticeElem& b);
bool quotient_leq(const FiniteDistLattice& lattice, std::span<const Elem> j, std::span<const Elem> u,
                  Elem a, Elem b);

/// The ideal (class of 0) and filter (class of 1) of L/(J = 0, U = 1).
struct ConjugatePair {
  std::vector<Elem> ideal;
  std::vector<Elem> filter;
};

/// Computes the pair and checks both conjugacy conditions; a failure there is
/// a VerificationFailure.
ConjugatePair conjugate_pair(const FiniteDistLattice& lattice, std::span<const Elem> j,
                             std::span<const Elem> u);

/// Presentation of the free Boolean algebra over the lattice presented by
/// `axioms`. Generator i keeps index i; its complement gets index n + i and the
/// name "~<name>". The axioms are the original ones plus x, ~x ⊢ and ⊢ x, ~x.
EntailmentAxioms boolean_completion(const EntailmentAxioms& axioms);

/// Index of the complement of generator i in boolean_completion's output.
inline std::size_t complement_index(const EntailmentAxioms& original, std::size_t i) {
  return original.generators.size() + i;
}

/// A presentation of a finite lattice by its join-irreducibles (generator "p<i>"
/// is the principal downset of poset point i): covers p ⊢ q, meets
/// p, q ⊢ {maximal common lower bounds}, and ⊢ {maximal points}.
EntailmentAxioms presentation_of(const FiniteDistLattice& lattice);

/// The element of presentation_of(lattice) corresponding to a lattice element.
FreeLatticeElem presented_element(const FiniteDistLattice& lattice, Elem a);

}  // namespace krullkit
