#pragma once

// The Zariski lattice of a discrete ring: elements are radicals of finitely
// generated ideals, kept as generator lists. The order is radical membership.

#include <optional>
#include <span>
#include <vector>

#include "krullkit/errors.hpp"
#include "krullkit/ring.hpp"

namespace krullkit {

/// √⟨g1, ..., gk⟩. The empty list is the bottom element.
template <class E>
struct ZarElem {
  std::vector<E> gens;
};

/// U ⊢ J in Zar(R): ∏U ∈ √⟨J⟩, the empty product being 1.
template <CommutativeRing R>
bool zar_entails(const R& ring, std::span<const typename R::Element> u, std::span<const typename R::Element> j) {
  typename R::Element product = ring.one();
  for (const auto& x : u) product = ring.mul(product, x);
  return ring.radical_member(product, j);
}

template <CommutativeRing R>
bool zar_leq(const R& ring, const ZarElem<typename R::Element>& a, const ZarElem<typename R::Element>& b) {
  for (const auto& g : a.gens) {
    if (!ring.radical_member(g, b.gens)) return false;
  }
  return true;
}

template <CommutativeRing R>
bool zar_equal(const R& ring, const ZarElem<typename R::Element>& a, const ZarElem<typename R::Element>& b) {
  return zar_leq(ring, a, b) && zar_leq(ring, b, a);
}

template <CommutativeRing R>
ZarElem<typename R::Element> zar_join(const R&, const ZarElem<typename R::Element>& a,
                                      const ZarElem<typename R::Element>& b) {
  ZarElem<typename R::Element> z = a;
  z.gens.insert(z.gens.end(), b.gens.begin(), b.gens.end());
  return z;
}

template <CommutativeRing R>
ZarElem<typename R::Element> zar_meet(const R& ring, const ZarElem<typename R::Element>& a,
                                      const ZarElem<typename R::Element>& b) {
  ZarElem<typename R::Element> z;
  for (const auto& x : a.gens) {
    for (const auto& y : b.gens) z.gens.push_back(ring.mul(x, y));
  }
  return z;
}

template <CommutativeRing R>
ZarElem<typename R::Element> zar_top(const R& ring) {
  return {{ring.one()}};
}

/// x̃ → Z = √(⟨Z⟩ : x^∞).
template <SaturatingRing R>
ZarElem<typename R::Element> zar_implies(const R& ring, const typename R::Element& x,
                                         const ZarElem<typename R::Element>& z) {
  return {ring.saturate(z.gens, x)};
}

/// M → Z as the meet of g̃ → Z over the generators g of M.
template <SaturatingRing R>
ZarElem<typename R::Element> zar_implies(const R& ring, const ZarElem<typename R::Element>& m,
                                         const ZarElem<typename R::Element>& z) {
  ZarElem<typename R::Element> result = zar_top(ring);
  for (const auto& g : m.gens) result = zar_meet(ring, result, zar_implies(ring, g, z));
  return result;
}

/// ∏ U_i^{exponents_i} = Σ cofactors_j · J_j.
template <class E>
struct MonoidMembership {
  std::vector<unsigned> exponents;
  std::vector<E> cofactors;
};

template <CommutativeRing R>
bool verify_monoid_membership(const R& ring, std::span<const typename R::Element> u,
                              std::span<const typename R::Element> j,
                              const MonoidMembership<typename R::Element>& cert) {
  if (cert.exponents.size() != u.size() || cert.cofactors.size() != j.size()) return false;
  typename R::Element lhs = ring.one();
  for (std::size_t i = 0; i < u.size(); ++i) lhs = ring.mul(lhs, ring_pow(ring, u[i], cert.exponents[i]));
  return ring.equal(lhs, ring_combination(ring, std::span<const typename R::Element>(cert.cofactors), j));
}

/// Smallest k ≤ max_power with (∏U)^k ∈ ⟨J⟩, with cofactors.
template <CommutativeRing R>
std::optional<MonoidMembership<typename R::Element>> find_monoid_membership(
    const R& ring, std::span<const typename R::Element> u, std::span<const typename R::Element> j,
    unsigned max_power) {
  typename R::Element product = ring.one();
  for (const auto& x : u) product = ring.mul(product, x);
  typename R::Element power = ring.one();
  for (unsigned k = 0; k <= max_power; ++k) {
    if (auto c = ring.ideal_cofactors(power, j)) {
      MonoidMembership<typename R::Element> cert{std::vector<unsigned>(u.size(), k), std::move(*c)};
      if (!verify_monoid_membership(ring, u, j, cert)) throw VerificationFailure("monoid membership failed to verify");
      return cert;
    }
    power = ring.mul(power, product);
  }
  return std::nullopt;
}

/// Cut in Zar(R) at the level of certificates. Given c1 with
/// Σ c1_i J_i = a^k m1 and c2 with Σ c2_i J_i = m2 + a x, returns cofactors of
/// m1·m2^k over J, using m2^k = (-a x)^k + (m2 + a x)·T with
/// T = Σ_{t<k} C(k,t) (-a x)^t (m2 + a x)^{k-1-t}. The result is
/// (-x)^k·c1 + m1·T·c2. Throws InvalidInput when an input fails.
template <CommutativeRing R>
std::vector<typename R::Element> zar_cut_certificate(const R& ring, std::span<const typename R::Element> j,
                                                     const typename R::Element& a, const typename R::Element& x,
                                                     const typename R::Element& m1, const typename R::Element& m2,
                                                     unsigned k, std::span<const typename R::Element> c1,
                                                     std::span<const typename R::Element> c2) {
  using E = typename R::Element;
  if (c1.size() != j.size() || c2.size() != j.size()) throw InvalidInput("cofactor count does not match the ideal");
  if (!ring.equal(ring_combination(ring, c1, j), ring.mul(ring_pow(ring, a, k), m1))) {
    throw InvalidInput("first cut premise does not verify");
  }
  const E w = ring.add(m2, ring.mul(a, x));
  if (!ring.equal(ring_combination(ring, c2, j), w)) throw InvalidInput("second cut premise does not verify");

  const E minus_ax = ring.neg(ring.mul(a, x));
  E t = ring.zero();
  mpz_class binom = 1;
  for (unsigned s = 0; s < k; ++s) {
    t = ring.add(t, ring.mul(ring.from_integer(binom),
                             ring.mul(ring_pow(ring, minus_ax, s), ring_pow(ring, w, k - 1 - s))));
    binom = binom * (k - s) / (s + 1);
  }
  const E scale1 = ring_pow(ring, ring.neg(x), k);
  const E scale2 = ring.mul(m1, t);
  std::vector<E> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ring.add(ring.mul(scale1, c1[i]), ring.mul(scale2, c2[i])));
  if (!ring.equal(ring_combination(ring, std::span<const E>(out), j), ring.mul(m1, ring_pow(ring, m2, k)))) {
    throw VerificationFailure("cut certificate failed to verify");
  }
  return out;
}

}  // namespace krullkit
