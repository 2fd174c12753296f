#pragma once

// Discrete commutative rings with a radical-membership oracle, and the
// concrete instances ℤ, ℤ/n and K[x1..xn].

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "krullkit/limits.hpp"
#include "krullkit/polynomial.hpp"

namespace krullkit {

/// A discrete commutative ring whose Zariski lattice is decidable.
///
/// radical_member(f, J) decides f ∈ √⟨J⟩; ideal_cofactors(f, J) returns c with
/// f = Σ c_i J_i, or nothing when f ∉ ⟨J⟩.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Element& a, const typename R::Element& b,
                                   std::span<const typename R::Element> gens, const mpz_class& n,
                                   std::string_view text) {
  typename R::Element;
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.add(a, b) } -> std::same_as<typename R::Element>;
  { r.sub(a, b) } -> std::same_as<typename R::Element>;
  { r.neg(a) } -> std::same_as<typename R::Element>;
  { r.mul(a, b) } -> std::same_as<typename R::Element>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.from_integer(n) } -> std::same_as<typename R::Element>;
  { r.to_string(a) } -> std::same_as<std::string>;
  { r.parse(text) } -> std::same_as<typename R::Element>;
  { r.name() } -> std::same_as<std::string>;
  { r.radical_member(a, gens) } -> std::same_as<bool>;
  { r.ideal_cofactors(a, gens) } -> std::same_as<std::optional<std::vector<typename R::Element>>>;
};

/// Rings that can also compute (⟨J⟩ : x^∞).
template <class R>
concept SaturatingRing = CommutativeRing<R> && requires(const R& r, std::span<const typename R::Element> gens,
                                                        const typename R::Element& x) {
  { r.saturate(gens, x) } -> std::same_as<std::vector<typename R::Element>>;
};

/// Rings that list small elements in a fixed order, used to pick
/// reproducible certificate coefficients.
template <class R>
concept EnumerableRing = CommutativeRing<R> && requires(const R& r, std::size_t i) {
  { r.enumerate(i) } -> std::same_as<std::optional<typename R::Element>>;
};

template <CommutativeRing R>
typename R::Element ring_pow(const R& ring, const typename R::Element& x, unsigned k) {
  typename R::Element result = ring.one();
  for (unsigned i = 0; i < k; ++i) result = ring.mul(result, x);
  return result;
}

/// Σ c_i g_i.
template <CommutativeRing R>
typename R::Element ring_combination(const R& ring, std::span<const typename R::Element> c,
                                     std::span<const typename R::Element> gens) {
  typename R::Element sum = ring.zero();
  for (std::size_t i = 0; i < gens.size() && i < c.size(); ++i) sum = ring.add(sum, ring.mul(c[i], gens[i]));
  return sum;
}

// ---------------------------------------------------------------------------

class IntegerRing {
 public:
  using Element = mpz_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a == 0; }
  Element from_integer(const mpz_class& n) const { return n; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "zz"; }

  bool radical_member(const Element& f, std::span<const Element> gens) const;
  std::optional<std::vector<Element>> ideal_cofactors(const Element& f, std::span<const Element> gens) const;
  std::vector<Element> saturate(std::span<const Element> gens, const Element& x) const;
  /// 0, 1, -1, 2, -2, ...
  std::optional<Element> enumerate(std::size_t index) const;

  /// Canonical generator of √⟨gens⟩: the squarefree kernel of the gcd, or the
  /// gcd itself when it is too large to factor by trial division.
  Element radical_generator(std::span<const Element> gens) const;
};

class ModularRing {
 public:
  using Element = mpz_class;

  /// Throws InvalidInput for n < 2.
  explicit ModularRing(mpz_class modulus);

  const mpz_class& modulus() const noexcept { return n_; }
  Element reduce(const mpz_class& a) const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  bool equal(const Element& a, const Element& b) const { return reduce(a) == reduce(b); }
  bool is_zero(const Element& a) const { return reduce(a) == 0; }
  Element from_integer(const mpz_class& n) const { return reduce(n); }
  std::string to_string(const Element& a) const { return reduce(a).get_str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "zmod:" + n_.get_str(); }

  bool radical_member(const Element& f, std::span<const Element> gens) const;
  std::optional<std::vector<Element>> ideal_cofactors(const Element& f, std::span<const Element> gens) const;
  std::vector<Element> saturate(std::span<const Element> gens, const Element& x) const;
  /// 0, 1, ..., n - 1.
  std::optional<Element> enumerate(std::size_t index) const;

 private:
  mpz_class n_;
};

/// K[x1..xn]; n = 0 is the field K itself. One variable uses Euclidean gcds,
/// two or more use Gröbner bases.
class PolynomialRing {
 public:
  using Element = Polynomial;

  PolynomialRing(Field field, std::size_t nvars, Limits limits = default_limits());

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Limits& limits() const noexcept { return limits_; }

  Element zero() const { return Polynomial(field_, nvars_); }
  Element one() const { return Polynomial::constant(field_, nvars_, 1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element from_integer(const mpz_class& n) const { return Polynomial::constant(field_, nvars_, field_.from_integer(n)); }
  std::string to_string(const Element& a) const { return a.to_string(); }
  Element parse(std::string_view text) const { return Polynomial::parse(text, field_, nvars_); }
  Element variable(std::size_t i) const { return Polynomial::variable(field_, nvars_, i); }
  /// "poly:<field>:<n>".
  std::string name() const;

  bool radical_member(const Element& f, std::span<const Element> gens) const;
  std::optional<std::vector<Element>> ideal_cofactors(const Element& f, std::span<const Element> gens) const;
  std::vector<Element> saturate(std::span<const Element> gens, const Element& x) const;

  /// Monic squarefree generator of √⟨gens⟩ in one variable.
  Element radical_generator(std::span<const Element> gens) const;

 private:
  Field field_;
  std::size_t nvars_;
  Limits limits_;
};

static_assert(SaturatingRing<IntegerRing>);
static_assert(SaturatingRing<ModularRing>);
static_assert(SaturatingRing<PolynomialRing>);
static_assert(EnumerableRing<IntegerRing>);
static_assert(EnumerableRing<ModularRing>);

/// Runtime choice of ring, for front ends.
using AnyRing = std::variant<IntegerRing, ModularRing, PolynomialRing>;

/// Parses "zz", "zmod:<n>", or "poly:<field>:<nvars>" with field "q",
/// "zp:<p>" or "zp<p>".
AnyRing parse_ring_selector(std::string_view selector, const Limits& limits = default_limits());

}  // namespace krullkit
