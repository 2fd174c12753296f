#pragma once

// Division, Buchberger's algorithm and the ideal-theoretic oracles built on
// it: membership with cofactors, radical membership, saturation, elimination.
//
// All generators of one call must share a ring. Resource caps come from
// Limits::max_basis_size and Limits::max_degree.

#include <span>
#include <vector>

#include "krullkit/limits.hpp"
#include "krullkit/polynomial.hpp"

namespace krullkit {

/// f = Σ quotients[i]·basis[i] + remainder, no remainder term divisible by a
/// leading term of the basis.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division in list order. The basis need not be a Gröbner basis.
DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

struct IdealBasis {
  std::vector<Polynomial> generators;
  /// Reduced monic Gröbner basis under `order`; empty for the zero ideal.
  std::vector<Polynomial> basis;
  MonomialOrder order;

  bool is_unit() const;
  /// Normal form against the basis is zero.
  bool contains(const Polynomial& f) const;
};

/// Reduced Gröbner basis via Buchberger with the product and chain criteria.
/// Throws ResourceLimit past the basis-size or degree cap.
IdealBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order = MonomialOrder::grevlex(),
                      const Limits& limits = default_limits());

/// Every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

struct MembershipResult {
  bool member = false;
  /// f = Σ cofactors[i]·gens[i] when member; checked before returning.
  std::vector<Polynomial> cofactors;
};

/// f ∈ ⟨gens⟩. The ring is taken from f.
MembershipResult ideal_membership(const Polynomial& f, std::span<const Polynomial> gens,
                                  const Limits& limits = default_limits());

/// f ∈ √⟨gens⟩, decided as 1 ∈ ⟨gens, 1 - t·f⟩ with a fresh variable t.
bool radical_membership(const Polynomial& f, std::span<const Polynomial> gens,
                        const Limits& limits = default_limits());

/// (⟨gens⟩ : f^∞) = ⟨gens, 1 - t·f⟩ ∩ K[x], with t eliminated first.
IdealBasis saturation(std::span<const Polynomial> gens, const Polynomial& f,
                      const Limits& limits = default_limits());

/// ⟨gens⟩ ∩ K[remaining variables]. The result stays in the original ring;
/// its elements do not involve the eliminated variables.
IdealBasis eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> variables,
                     const Limits& limits = default_limits());

}  // namespace krullkit
