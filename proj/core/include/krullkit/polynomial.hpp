#pragma once

// Multivariate polynomials with exact coefficients over Q or GF(p).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace krullkit {

using Scalar = mpq_class;

/// Q (characteristic 0) or GF(p) for a prime p < 2^31. GF(p) scalars are
/// stored as integers in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Reduces into canonical form. Throws InvalidInput when a denominator
  /// vanishes in GF(p).
  Scalar normalize(const Scalar& c) const;
  Scalar from_integer(const mpz_class& n) const { return normalize(Scalar(n)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  /// Throws InvalidInput for zero.
  Scalar inverse(const Scalar& a) const;

  /// GF(p) values print in the symmetric range, so p - 1 prints as -1.
  std::string to_string(const Scalar& c) const;
  /// "q" or "zp:<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

using Monomial = std::vector<std::uint32_t>;

std::uint64_t monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, grevlex, block };

/// lex, grevlex, or an elimination order: the first `block_size` variables
/// compared by grevlex first, ties broken by grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block_size = 0;

  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::block, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Term {
  Monomial exponents;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  /// The zero polynomial of Field[x1..xn].
  Polynomial(Field field = Field(), std::size_t nvars = 0) : field_(field), nvars_(nvars) {}

  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
  static Polynomial monomial(Field field, std::size_t nvars, Monomial exponents, const Scalar& c);
  /// Combines like terms, reduces coefficients, drops zeros, sorts.
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);
  /// Parses "3*x1^2*x2 - x3 + 1"; variables are x1..xn.
  static Polynomial parse(std::string_view text, Field field, std::size_t nvars);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  /// Terms in descending grevlex order.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The constant term.
  Scalar constant_term() const;
  /// -1 for the zero polynomial.
  long total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  /// Greatest term under `order`; the polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Coefficient of the given monomial (0 when absent).
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t var) const;
  /// Substitutes values[i] for x_{i+1}; the result lives in the values' ring.
  Polynomial evaluate(std::span<const Polynomial> values) const;
  /// Moves x_{i+1} to variable target[i] of a ring with `nvars` variables.
  Polynomial rename(std::size_t nvars, std::span<const std::size_t> target) const;

  std::string to_string(std::string_view prefix = "x") const;

 private:
  void check_compatible(const Polynomial& o) const;

  Field field_;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Univariate algorithms over a field (nvars == 1).
namespace univariate {

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
struct ExtGcd {
  Polynomial g, s, t;  // s*a + t*b = g, g monic (or zero)
};
ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b);
/// Monic squarefree part: the product of the distinct monic irreducible
/// factors. Handles characteristic p, where g' may vanish.
Polynomial squarefree_part(const Polynomial& f);
Polynomial make_monic(const Polynomial& f);

}  // namespace univariate

}  // namespace krullkit
