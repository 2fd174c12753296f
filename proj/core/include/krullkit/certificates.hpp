#pragma once

// Krull-dimension certificates for rings: singular sequences and the two
// equivalent forms of a collapsing idealistic chain.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "krullkit/errors.hpp"
#include "krullkit/limits.hpp"
#include "krullkit/ring.hpp"

namespace krullkit {

// ---------------------------------------------------------------------------
// Singular sequences

/// Exponents m and coefficients a with
///   x1^m1 (x2^m2 (... (xl^ml (1 + al·xl) + ...) + a2·x2) + a1·x1) = 0.
template <class E>
struct SingularityCertificate {
  std::vector<unsigned> m;
  std::vector<E> a;
};

/// The left-hand side of the certificate identity. Throws InvalidInput on an
/// arity mismatch.
template <CommutativeRing R>
typename R::Element singularity_value(const R& ring, std::span<const typename R::Element> xs,
                                      const SingularityCertificate<typename R::Element>& cert) {
  if (cert.m.size() != xs.size() || cert.a.size() != xs.size()) {
    throw InvalidInput("certificate has " + std::to_string(cert.m.size()) + " exponents and " +
                       std::to_string(cert.a.size()) + " coefficients for a sequence of length " +
                       std::to_string(xs.size()));
  }
  typename R::Element e = ring.one();
  for (std::size_t i = xs.size(); i-- > 0;) {
    e = ring.mul(ring_pow(ring, xs[i], cert.m[i]), ring.add(e, ring.mul(cert.a[i], xs[i])));
  }
  return e;
}

template <CommutativeRing R>
bool verify_certificate(const R& ring, std::span<const typename R::Element> xs,
                        const SingularityCertificate<typename R::Element>& cert) {
  return ring.is_zero(singularity_value(ring, xs, cert));
}

struct SearchBounds {
  unsigned max_exponent = 8;
  /// Double the exponent bound until hard_cap when nothing is found.
  bool escalate = false;
  unsigned hard_cap = 64;
  /// Per-coordinate budget when picking coefficients from a ring's enumeration.
  std::size_t coefficient_budget = 17;
};

namespace detail {

// Exponent vectors with entries in [0, cap], ordered by sum, then lex; those
// entirely within [0, floor] are skipped.
inline std::vector<std::vector<unsigned>> exponent_vectors(std::size_t l, unsigned floor_exclusive, unsigned cap,
                                                           bool skip_inner) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> v(l, 0);
  while (true) {
    const bool inner = std::all_of(v.begin(), v.end(), [&](unsigned e) { return e <= floor_exclusive; });
    if (!(skip_inner && inner)) out.push_back(v);
    std::size_t pos = 0;
    while (pos < l && v[pos] == cap) v[pos++] = 0;
    if (pos == l) break;
    ++v[pos];
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    unsigned sa = 0, sb = 0;
    for (auto e : a) sa += e;
    for (auto e : b) sb += e;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

// First a (coordinate l outermost) from the ring's enumeration with
// Σ a_i g_i = target, within the budget.
template <EnumerableRing R>
std::optional<std::vector<typename R::Element>> enumerate_solution(const R& ring, const typename R::Element& target,
                                                                   std::span<const typename R::Element> gens,
                                                                   std::size_t budget) {
  std::vector<typename R::Element> values;
  for (std::size_t i = 0; i < budget; ++i) {
    auto v = ring.enumerate(i);
    if (!v) break;
    values.push_back(std::move(*v));
  }
  const std::size_t l = gens.size();
  if (values.empty()) return std::nullopt;
  std::vector<std::size_t> idx(l, 0);
  while (true) {
    std::vector<typename R::Element> a;
    for (std::size_t i = 0; i < l; ++i) a.push_back(values[idx[i]]);
    if (ring.equal(ring_combination(ring, std::span<const typename R::Element>(a), gens), target)) return a;
    std::size_t pos = 0;
    while (pos < l && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == l) return std::nullopt;
  }
}

}  // namespace detail

/// Looks for a certificate with every m_i ≤ bounds.max_exponent (escalating
/// when asked). For each m, in order of Σm then lex, E_1 is affine in a:
/// E_1 = P_l + Σ a_i x_i P_i with P_i = x1^m1⋯xi^mi, so a exists iff
/// -P_l ∈ ⟨x_i P_i⟩, decided exactly by the ring's membership oracle. When
/// the ring enumerates small elements, the first enumerated solution is
/// preferred over the oracle's cofactors. Nothing found means nothing exists
/// within the exponent bound. Every result is re-verified.
template <CommutativeRing R>
std::optional<SingularityCertificate<typename R::Element>> search_certificate(
    const R& ring, std::span<const typename R::Element> xs, const SearchBounds& bounds = {},
    const Limits& limits = default_limits()) {
  using E = typename R::Element;
  const std::size_t l = xs.size();
  unsigned tried = 0;
  bool first_round = true;
  for (unsigned cap = bounds.max_exponent;; cap = std::min(bounds.hard_cap, cap * 2)) {
    if (saturating_pow(cap + 1, l) > limits.max_search) {
      throw ResourceLimit("exponent search space exceeds " + std::to_string(limits.max_search));
    }
    for (const auto& m : detail::exponent_vectors(l, tried, cap, !first_round)) {
      std::vector<E> gens;
      E prefix = ring.one();
      for (std::size_t i = 0; i < l; ++i) {
        prefix = ring.mul(prefix, ring_pow(ring, xs[i], m[i]));
        gens.push_back(ring.mul(xs[i], prefix));
      }
      const E target = ring.neg(prefix);
      auto cofactors = ring.ideal_cofactors(target, gens);
      if (!cofactors) continue;
      if constexpr (EnumerableRing<R>) {
        if (auto small = detail::enumerate_solution(ring, target, std::span<const E>(gens), bounds.coefficient_budget)) {
          cofactors = std::move(small);
        }
      }
      SingularityCertificate<E> cert{m, std::move(*cofactors)};
      if (!verify_certificate(ring, xs, cert)) throw VerificationFailure("search produced an invalid certificate");
      return cert;
    }
    tried = cap;
    first_round = false;
    if (!bounds.escalate || cap >= bounds.hard_cap || cap == 0) return std::nullopt;
  }
}

/// Certificate from an algebraic relation Q(x1..xl) = 0, Q in K[y1..yl].
/// Q is scaled so that its lex-least monomial y^m has coefficient 1; every
/// other monomial μ goes to the first index i with μ_i > m_i and contributes
/// μ / (y1^m1⋯y_{i-1}^m_{i-1} y_i^{m_i+1}) to R_i; then a_i = R_i(xs).
/// Throws InvalidInput when Q = 0 or Q(xs) ≠ 0.
SingularityCertificate<Polynomial> certificate_from_dependence(const PolynomialRing& ring, const Polynomial& q,
                                                               std::span<const Polynomial> xs);

/// A nonzero Q in K[y1..yk] with Q(f1..fk) = 0 of least total degree among
/// the generators of ⟨y_i - f_i⟩ ∩ K[y], or nothing when that intersection is
/// zero (the f's are algebraically independent).
std::optional<Polynomial> algebraic_dependence(const PolynomialRing& ring, std::span<const Polynomial> fs);

/// dim K ≤ 0: x = 0 gives (m = 1, a = 0), otherwise (m = 0, a = -1/x).
/// The ring must have no variables.
SingularityCertificate<Polynomial> field_cert(const PolynomialRing& field, std::span<const Polynomial> xs);

/// dim ℤ ≤ 1 for a pair (x1, x2).
SingularityCertificate<mpz_class> integer_cert(const IntegerRing& ring, std::span<const mpz_class> xs);

// ---------------------------------------------------------------------------
// Collapse of idealistic chains

/// (J_0, U_0), ..., (J_l, U_l) with ring elements.
template <class E>
struct RingChain {
  std::vector<std::vector<E>> j;
  std::vector<std::vector<E>> u;

  std::size_t length() const { return j.empty() ? 0 : j.size() - 1; }
};

/// u_i = ∏ U_i^{u_exponents[i]}, j_i = Σ j_cofactors[i]·J_i and
///   u_0(u_1(⋯(u_l + j_l)⋯) + j_1) + j_0 = 0.
template <class E>
struct CollapseForm1 {
  RingChain<E> chain;
  std::vector<std::vector<unsigned>> u_exponents;
  std::vector<std::vector<E>> j_cofactors;
};

/// One membership x_{i+1}^k ∏U_i^e = Σ c·J_i + b·x_i. Line 0 has no b term
/// and line l has no x_{l+1} factor.
template <class E>
struct Form3Line {
  std::vector<unsigned> u_exponents;
  unsigned next_exponent = 0;
  std::vector<E> j_cofactors;
  E prev_cofactor{};
};

/// x_1..x_l with the memberships x_1, U_0 ⊢ J_0; x_{i+1}, U_i ⊢ J_i, x_i;
/// U_l ⊢ J_l, x_l in Zar(R).
template <class E>
struct CollapseForm3 {
  RingChain<E> chain;
  std::vector<E> xs;
  std::vector<Form3Line<E>> lines;
};

namespace detail {

template <CommutativeRing R>
typename R::Element monoid_value(const R& ring, std::span<const typename R::Element> u,
                                 std::span<const unsigned> exps) {
  typename R::Element v = ring.one();
  for (std::size_t i = 0; i < u.size(); ++i) v = ring.mul(v, ring_pow(ring, u[i], exps[i]));
  return v;
}

template <class E>
void check_chain_shape(const RingChain<E>& chain) {
  if (chain.j.empty() || chain.j.size() != chain.u.size()) {
    throw InvalidInput("a chain needs matching, nonempty J and U lists");
  }
}

}  // namespace detail

/// The nested value u_0(u_1(⋯) + j_1) + j_0; throws InvalidInput on shape errors.
template <CommutativeRing R>
typename R::Element form1_value(const R& ring, const CollapseForm1<typename R::Element>& d) {
  detail::check_chain_shape(d.chain);
  const std::size_t levels = d.chain.j.size();
  if (d.u_exponents.size() != levels || d.j_cofactors.size() != levels) {
    throw InvalidInput("form-1 data needs exponents and cofactors for every level");
  }
  typename R::Element v = ring.zero();
  for (std::size_t i = levels; i-- > 0;) {
    if (d.u_exponents[i].size() != d.chain.u[i].size() || d.j_cofactors[i].size() != d.chain.j[i].size()) {
      throw InvalidInput("form-1 level " + std::to_string(i) + " has the wrong number of exponents or cofactors");
    }
    const auto u = detail::monoid_value(ring, std::span<const typename R::Element>(d.chain.u[i]),
                                        std::span<const unsigned>(d.u_exponents[i]));
    const auto j = ring_combination(ring, std::span<const typename R::Element>(d.j_cofactors[i]),
                                    std::span<const typename R::Element>(d.chain.j[i]));
    v = i + 1 == levels ? ring.add(u, j) : ring.add(ring.mul(u, v), j);
  }
  return v;
}

template <CommutativeRing R>
bool verify_form1(const R& ring, const CollapseForm1<typename R::Element>& d) {
  return ring.is_zero(form1_value(ring, d));
}

/// Checks every line; throws InvalidInput on shape errors.
template <CommutativeRing R>
bool verify_form3(const R& ring, const CollapseForm3<typename R::Element>& d) {
  using E = typename R::Element;
  detail::check_chain_shape(d.chain);
  const std::size_t l = d.chain.length();
  if (d.xs.size() != l || d.lines.size() != l + 1) {
    throw InvalidInput("form-3 data needs " + std::to_string(l) + " elements and " + std::to_string(l + 1) + " lines");
  }
  for (std::size_t i = 0; i <= l; ++i) {
    const Form3Line<E>& line = d.lines[i];
    if (line.u_exponents.size() != d.chain.u[i].size() || line.j_cofactors.size() != d.chain.j[i].size()) {
      throw InvalidInput("form-3 line " + std::to_string(i) + " has the wrong number of exponents or cofactors");
    }
    E lhs = detail::monoid_value(ring, std::span<const E>(d.chain.u[i]), std::span<const unsigned>(line.u_exponents));
    if (i < l) lhs = ring.mul(ring_pow(ring, d.xs[i], line.next_exponent), lhs);
    E rhs = ring_combination(ring, std::span<const E>(line.j_cofactors), std::span<const E>(d.chain.j[i]));
    if (i > 0) rhs = ring.add(rhs, ring.mul(line.prev_cofactor, d.xs[i - 1]));
    if (!ring.equal(lhs, rhs)) return false;
  }
  return true;
}

/// x_l = u_l + j_l, x_i = x_{i+1}u_i + j_i. Throws InvalidInput when the
/// input identity fails.
template <CommutativeRing R>
CollapseForm3<typename R::Element> collapse_1_to_3(const R& ring, const CollapseForm1<typename R::Element>& d) {
  using E = typename R::Element;
  if (!verify_form1(ring, d)) throw InvalidInput("form-1 identity does not verify");
  const std::size_t l = d.chain.length();
  auto u_val = [&](std::size_t i) {
    return detail::monoid_value(ring, std::span<const E>(d.chain.u[i]), std::span<const unsigned>(d.u_exponents[i]));
  };
  auto j_val = [&](std::size_t i) {
    return ring_combination(ring, std::span<const E>(d.j_cofactors[i]), std::span<const E>(d.chain.j[i]));
  };
  CollapseForm3<E> out;
  out.chain = d.chain;
  out.xs.resize(l);
  if (l > 0) {
    out.xs[l - 1] = ring.add(u_val(l), j_val(l));
    for (std::size_t i = l - 1; i >= 1; --i) out.xs[i - 1] = ring.add(ring.mul(out.xs[i], u_val(i)), j_val(i));
  }
  for (std::size_t i = 0; i <= l; ++i) {
    Form3Line<E> line;
    line.u_exponents = d.u_exponents[i];
    line.next_exponent = i < l ? 1 : 0;
    for (const auto& c : d.j_cofactors[i]) line.j_cofactors.push_back(ring.neg(c));
    line.prev_cofactor = i > 0 ? ring.one() : ring.zero();
    out.lines.push_back(std::move(line));
  }
  if (!verify_form3(ring, out)) throw VerificationFailure("form-3 data produced from form 1 does not verify");
  return out;
}

namespace detail {

// Replaces levels s..l so that the new nested value N_s is the old one to the
// power p: (u·N + j)^p = u^p N^p + j·Σ_{t<p} C(p,t) (u·N)^t j^{p-1-t}.
template <CommutativeRing R>
void power_chain(const R& ring, const RingChain<typename R::Element>& chain,
                 std::vector<std::vector<unsigned>>& exps, std::vector<std::vector<typename R::Element>>& cofs,
                 std::size_t s, unsigned p) {
  using E = typename R::Element;
  const std::size_t l = chain.length();
  if (p == 0) {
    for (std::size_t i = s; i <= l; ++i) {
      std::fill(exps[i].begin(), exps[i].end(), 0u);
      for (auto& c : cofs[i]) c = ring.zero();
    }
    return;
  }
  const E u = monoid_value(ring, std::span<const E>(chain.u[s]), std::span<const unsigned>(exps[s]));
  const E j = ring_combination(ring, std::span<const E>(cofs[s]), std::span<const E>(chain.j[s]));
  E m = u;
  if (s < l) {
    // Old N_{s+1}.
    E n = ring.zero();
    for (std::size_t i = l + 1; i-- > s + 1;) {
      const E ui = monoid_value(ring, std::span<const E>(chain.u[i]), std::span<const unsigned>(exps[i]));
      const E ji = ring_combination(ring, std::span<const E>(cofs[i]), std::span<const E>(chain.j[i]));
      n = i == l ? ring.add(ui, ji) : ring.add(ring.mul(ui, n), ji);
    }
    m = ring.mul(u, n);
  }
  E sum = ring.zero();
  mpz_class binom = 1;
  for (unsigned t = 0; t < p; ++t) {
    sum = ring.add(sum, ring.mul(ring.from_integer(binom), ring.mul(ring_pow(ring, m, t), ring_pow(ring, j, p - 1 - t))));
    binom = binom * (p - t) / (t + 1);
  }
  for (auto& e : exps[s]) e *= p;
  for (auto& c : cofs[s]) c = ring.mul(c, sum);
  if (s < l) power_chain(ring, chain, exps, cofs, s + 1, p);
}

}  // namespace detail

/// Top-down elimination: with N_{i+1} = δ·x_{i+1}, raise the upper chain to
/// the line's power k, multiply line i by δ^k and absorb it as level i, so
/// N_i = δ^k b_i x_i. Line 0 closes the identity. Throws InvalidInput when
/// the input memberships fail.
template <CommutativeRing R>
CollapseForm1<typename R::Element> collapse_3_to_1(const R& ring, const CollapseForm3<typename R::Element>& d) {
  using E = typename R::Element;
  if (!verify_form3(ring, d)) throw InvalidInput("form-3 memberships do not verify");
  const std::size_t l = d.chain.length();
  CollapseForm1<E> out;
  out.chain = d.chain;
  out.u_exponents.resize(l + 1);
  out.j_cofactors.resize(l + 1);

  out.u_exponents[l] = d.lines[l].u_exponents;
  for (const auto& c : d.lines[l].j_cofactors) out.j_cofactors[l].push_back(ring.neg(c));
  E delta = l > 0 ? d.lines[l].prev_cofactor : ring.one();
  for (std::size_t i = l; i-- > 0;) {
    const unsigned k = d.lines[i].next_exponent;
    detail::power_chain(ring, out.chain, out.u_exponents, out.j_cofactors, i + 1, k);
    const E dk = ring_pow(ring, delta, k);
    out.u_exponents[i] = d.lines[i].u_exponents;
    for (const auto& c : d.lines[i].j_cofactors) out.j_cofactors[i].push_back(ring.neg(ring.mul(dk, c)));
    if (i > 0) delta = ring.mul(dk, d.lines[i].prev_cofactor);
  }
  if (!verify_form1(ring, out)) throw VerificationFailure("form-1 identity produced from form 3 does not verify");
  return out;
}

/// The form-1 data of the elementary chain (∅, {x1}), ({x1}, {x2}), ...,
/// ({xl}, ∅) read off a singularity certificate: u_{i-1} = x_i^{m_i},
/// u_l = 1, j_i = a_i·x_i, j_0 = 0.
template <CommutativeRing R>
CollapseForm1<typename R::Element> form1_from_singularity(const R& ring, std::span<const typename R::Element> xs,
                                                          const SingularityCertificate<typename R::Element>& cert) {
  using E = typename R::Element;
  if (!verify_certificate(ring, xs, cert)) throw InvalidInput("singularity certificate does not verify");
  const std::size_t l = xs.size();
  CollapseForm1<E> out;
  out.chain.j.resize(l + 1);
  out.chain.u.resize(l + 1);
  out.u_exponents.resize(l + 1);
  out.j_cofactors.resize(l + 1);
  for (std::size_t i = 0; i < l; ++i) {
    out.chain.u[i] = {xs[i]};
    out.u_exponents[i] = {cert.m[i]};
    out.chain.j[i + 1] = {xs[i]};
    out.j_cofactors[i + 1] = {cert.a[i]};
  }
  if (!verify_form1(ring, out)) throw VerificationFailure("form-1 data from a certificate does not verify");
  return out;
}

}  // namespace krullkit
