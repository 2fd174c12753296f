#pragma once

// Order decision in Kr_l(L), idealistic chains and their collapse, and the
// Krull dimension of a finite distributive lattice.

#include <cstdint>
#include <optional>
#include <vector>

#include "krullkit/lattice.hpp"
#include "krullkit/limits.hpp"

namespace krullkit {

/// (J, U): partial description of a prime containing J and missing U.
struct IdealisticPrime {
  std::vector<Elem> j;
  std::vector<Elem> u;
};

/// (J0, U0), ..., (Jl, Ul).
struct IdealisticChain {
  std::vector<IdealisticPrime> pairs;

  std::size_t length() const noexcept { return pairs.empty() ? 0 : pairs.size() - 1; }
};

/// ⋀ φ_i(U_i) ≤ ⋁ φ_i(J_i) in Kr_l(L), levels 0..l.
struct KrQuery {
  std::size_t levels = 0;
  std::vector<std::vector<Elem>> u;
  std::vector<std::vector<Elem>> j;

  /// Empty U_i and J_i at every level.
  static KrQuery empty(std::size_t levels);
  static KrQuery from_chain(const IdealisticChain& chain);
};

/// x_1, ..., x_l for the triangular system
///   x_1, U_0 ⊢ J_0;  x_{i+1}, U_i ⊢ J_i, x_i;  U_l ⊢ J_l, x_l.
struct ChainWitness {
  std::vector<Elem> xs;

  friend bool operator==(const ChainWitness&, const ChainWitness&) = default;
};

/// A ⊢ B with explicit element lists.
struct ElemSequent {
  std::vector<Elem> lhs;
  std::vector<Elem> rhs;
};

struct KrSearchOptions {
  /// Workers splitting the outermost coordinate x_l. The result does not
  /// depend on this.
  unsigned workers = 1;
};

/// Checks the arity and that every level's elements belong to the lattice.
void validate_query(const FiniteDistLattice& lattice, const KrQuery& q);

bool verify_witness(const FiniteDistLattice& lattice, const KrQuery& q, const ChainWitness& w);

/// First witness in lexicographic order on (x_l, ..., x_1), each coordinate in
/// canonical element order. Throws ResourceLimit when |L|^l exceeds
/// limits.max_search.
std::optional<ChainWitness> kr_entails(const FiniteDistLattice& lattice, const KrQuery& q,
                                       const Limits& limits = default_limits(),
                                       const KrSearchOptions& options = {});

/// 1 = u_l → (j_l ∨ (u_{l-1} → (j_{l-1} ∨ ... (u_0 → j_0)))).
bool kr_entails_heyting(const FiniteDistLattice& lattice, const KrQuery& q);

/// The pointwise greatest witness, built level by level from Heyting
/// implications: x_1 = u_0 → j_0, x_{i+1} = u_i → (j_i ∨ x_i). Any witness lies
/// below it, and a witness exists iff this one works.
std::optional<ChainWitness> heyting_witness(const FiniteDistLattice& lattice, const KrQuery& q);

/// ⋀U ≤ ⋁J.
bool prime_collapses(const FiniteDistLattice& lattice, const IdealisticPrime& p);

/// Cut on x: from x, U0 ⊢ J0 and U1 ⊢ x, J1 produce U0, U1 ⊢ J0, J1. Throws
/// InvalidInput when x is missing from the expected side or an input sequent
/// does not hold.
ElemSequent combine_collapse(const FiniteDistLattice& lattice, const ElemSequent& left,
                             const ElemSequent& right, Elem x);

std::optional<ChainWitness> chain_collapses(const FiniteDistLattice& lattice, const IdealisticChain& chain,
                                            const Limits& limits = default_limits());

/// (∅, {x1}), ({x1}, {x2}), ..., ({xl}, ∅).
IdealisticChain elementary_chain(const std::vector<Elem>& xs);

/// One row of the dimension table: a sequence and its a_1..a_{d+1}.
struct DimWitness {
  std::vector<Elem> xs;
  std::vector<Elem> as;
};

struct DimCheck {
  bool holds = false;
  /// A sequence admitting no a's, when !holds.
  std::optional<std::vector<Elem>> counterexample;
  /// Every sequence with its witness, when requested and holds.
  std::vector<DimWitness> witnesses;
};

struct DimOptions {
  /// Let sequences range over the join-irreducibles instead of all of L.
  bool over_generators = true;
  bool record_witnesses = false;
};

/// a_1 ∧ x_1 = 0, a_{i+1} ∧ x_{i+1} ≤ a_i ∨ x_i, 1 = a_{d+1} ∨ x_{d+1}.
bool verify_dim_witness(const FiniteDistLattice& lattice, const DimWitness& w);

/// dim L ≤ d. The decision walks the reachable values of x_i ∨ a_i with the
/// greatest a's, so it does not enumerate sequences unless witnesses are
/// recorded (then |G|^{d+1} is capped by limits.max_search).
DimCheck lattice_dim_leq(const FiniteDistLattice& lattice, int d, const DimOptions& options = {},
                         const Limits& limits = default_limits());

/// Least d ≥ -1 with dim L ≤ d.
int lattice_dimension(const FiniteDistLattice& lattice, const Limits& limits = default_limits());

/// Longest strictly increasing chain of prime kernels, minus one; -1 when
/// Spec(L) is empty.
int spectral_dimension(const FiniteDistLattice& lattice);

}  // namespace krullkit
