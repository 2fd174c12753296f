#include <algorithm>

#include "krullkit/detail/expr_parser.hpp"
#include "krullkit/errors.hpp"
#include "krullkit/groebner.hpp"
#include "krullkit/ring.hpp"

namespace krullkit {

namespace {

struct IntegerParseOps {
  mpz_class number(const std::string& literal) const {
    if (literal.find('/') != std::string::npos) throw InvalidInput("'" + literal + "' is not an integer");
    return mpz_class(literal);
  }
  mpz_class variable(std::string_view name) const {
    throw InvalidInput("integer expressions have no variables (got '" + std::string(name) + "')");
  }
  mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
  mpz_class neg(const mpz_class& a) const { return -a; }
  mpz_class pow(const mpz_class& a, unsigned k) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
  }
};

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Removes from g every prime factor it shares with x.
mpz_class strip_common(mpz_class g, const mpz_class& x) {
  if (g == 0) return g;
  for (mpz_class d = gcd(g, x); d > 1; d = gcd(g, x)) g /= d;
  return g;
}

// g = Σ c_i gens_i with g = gcd(gens) ≥ 0.
std::pair<mpz_class, std::vector<mpz_class>> integer_bezout(std::span<const mpz_class> gens) {
  mpz_class g = 0;
  std::vector<mpz_class> c(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    mpz_class next, s, t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), gens[i].get_mpz_t());
    for (std::size_t k = 0; k < i; ++k) c[k] *= s;
    c[i] = t;
    g = next;
  }
  return {g, c};
}

template <class R>
void check_cofactors(const R& ring, const typename R::Element& f, std::span<const typename R::Element> gens,
                     const std::vector<typename R::Element>& c) {
  if (!ring.equal(ring_combination(ring, std::span<const typename R::Element>(c), gens), f)) {
    throw VerificationFailure("ideal cofactors failed to verify in " + ring.name());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ℤ

IntegerRing::Element IntegerRing::parse(std::string_view text) const {
  return detail::parse_expression<mpz_class>(text, IntegerParseOps{});
}

bool IntegerRing::radical_member(const Element& f, std::span<const Element> gens) const {
  const mpz_class g = integer_bezout(gens).first;
  if (g == 0) return f == 0;
  return strip_common(g, f) == 1;
}

std::optional<std::vector<IntegerRing::Element>> IntegerRing::ideal_cofactors(const Element& f,
                                                                              std::span<const Element> gens) const {
  auto [g, c] = integer_bezout(gens);
  if (g == 0) {
    if (f != 0) return std::nullopt;
    return std::vector<Element>(gens.size(), 0);
  }
  if (f % g != 0) return std::nullopt;
  const mpz_class q = f / g;
  for (auto& x : c) x *= q;
  check_cofactors(*this, f, gens, c);
  return c;
}

std::vector<IntegerRing::Element> IntegerRing::saturate(std::span<const Element> gens, const Element& x) const {
  if (x == 0) return {1};
  const mpz_class g = integer_bezout(gens).first;
  if (g == 0) return {};
  return {strip_common(g, x)};
}

std::optional<IntegerRing::Element> IntegerRing::enumerate(std::size_t index) const {
  if (index == 0) return mpz_class(0);
  const mpz_class k(static_cast<unsigned long>((index + 1) / 2));
  return index % 2 == 1 ? k : mpz_class(-k);
}

IntegerRing::Element IntegerRing::radical_generator(std::span<const Element> gens) const {
  mpz_class g = integer_bezout(gens).first;
  if (g <= 1) return g;
  mpz_class rad = 1;
  for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= g; ++p) {
    if (mpz_divisible_ui_p(g.get_mpz_t(), p) == 0) continue;
    rad *= p;
    while (mpz_divisible_ui_p(g.get_mpz_t(), p) != 0) g /= p;
  }
  if (g == 1) return rad;
  if (mpz_class(1000000) * 1000000 >= g || mpz_probab_prime_p(g.get_mpz_t(), 30) != 0) return rad * g;
  return integer_bezout(gens).first;
}

// ---------------------------------------------------------------------------
// ℤ/n

ModularRing::ModularRing(mpz_class modulus) : n_(std::move(modulus)) {
  if (n_ < 2) throw InvalidInput("modulus must be at least 2");
}

ModularRing::Element ModularRing::reduce(const mpz_class& a) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t());
  return r;
}

ModularRing::Element ModularRing::parse(std::string_view text) const {
  return reduce(detail::parse_expression<mpz_class>(text, IntegerParseOps{}));
}

bool ModularRing::radical_member(const Element& f, std::span<const Element> gens) const {
  mpz_class g = n_;
  for (const auto& x : gens) g = gcd(g, x);
  return strip_common(g, reduce(f)) == 1;
}

std::optional<std::vector<ModularRing::Element>> ModularRing::ideal_cofactors(const Element& f,
                                                                              std::span<const Element> gens) const {
  std::vector<mpz_class> all(gens.begin(), gens.end());
  all.push_back(n_);
  auto [g, c] = integer_bezout(all);
  const mpz_class r = reduce(f);
  if (r % g != 0) return std::nullopt;
  const mpz_class q = r / g;
  c.pop_back();
  for (auto& x : c) x = reduce(x * q);
  check_cofactors(*this, f, gens, c);
  return c;
}

std::vector<ModularRing::Element> ModularRing::saturate(std::span<const Element> gens, const Element& x) const {
  mpz_class g = n_;
  for (const auto& y : gens) g = gcd(g, y);
  return {reduce(strip_common(g, reduce(x)))};
}

std::optional<ModularRing::Element> ModularRing::enumerate(std::size_t index) const {
  const mpz_class k(static_cast<unsigned long>(index));
  if (k >= n_) return std::nullopt;
  return k;
}

// ---------------------------------------------------------------------------
// K[x1..xn]

PolynomialRing::PolynomialRing(Field field, std::size_t nvars, Limits limits)
    : field_(field), nvars_(nvars), limits_(limits) {
  if (nvars > 30) throw ResourceLimit("at most 30 variables are supported");
}

std::string PolynomialRing::name() const { return "poly:" + field_.name() + ":" + std::to_string(nvars_); }

namespace {

Polynomial univariate_gcd_all(std::span<const Polynomial> gens, const Field& field) {
  Polynomial g(field, 1);
  for (const auto& x : gens) g = univariate::gcd(g, x);
  return g;
}

}  // namespace

bool PolynomialRing::radical_member(const Element& f, std::span<const Element> gens) const {
  if (nvars_ == 0) {
    return f.is_zero() || std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return !g.is_zero(); });
  }
  if (nvars_ == 1) {
    const Polynomial g = univariate_gcd_all(gens, field_);
    if (g.is_zero()) return f.is_zero();
    return univariate::divmod(f, univariate::squarefree_part(g)).second.is_zero();
  }
  return radical_membership(f, gens, limits_);
}

std::optional<std::vector<PolynomialRing::Element>> PolynomialRing::ideal_cofactors(
    const Element& f, std::span<const Element> gens) const {
  std::vector<Polynomial> c(gens.size(), zero());
  if (f.is_zero()) return c;
  if (nvars_ == 0) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      c[i] = Polynomial::constant(field_, 0, field_.mul(f.constant_term(), field_.inverse(gens[i].constant_term())));
      check_cofactors(*this, f, gens, c);
      return c;
    }
    return std::nullopt;
  }
  if (nvars_ == 1) {
    Polynomial g(field_, 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto e = univariate::ext_gcd(g, gens[i]);
      for (std::size_t k = 0; k < i; ++k) c[k] = c[k] * e.s;
      c[i] = e.t;
      g = e.g;
    }
    if (g.is_zero()) return std::nullopt;
    const auto [q, r] = univariate::divmod(f, g);
    if (!r.is_zero()) return std::nullopt;
    for (auto& x : c) x = x * q;
    check_cofactors(*this, f, gens, c);
    return c;
  }
  auto m = ideal_membership(f, gens, limits_);
  if (!m.member) return std::nullopt;
  return std::move(m.cofactors);
}

std::vector<PolynomialRing::Element> PolynomialRing::saturate(std::span<const Element> gens, const Element& x) const {
  if (x.is_zero()) return {one()};
  if (nvars_ == 0) {
    if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return !g.is_zero(); })) return {one()};
    return {};
  }
  if (nvars_ == 1) {
    Polynomial g = univariate_gcd_all(gens, field_);
    if (g.is_zero()) return {};
    for (Polynomial d = univariate::gcd(g, x); !d.is_constant(); d = univariate::gcd(g, x)) {
      g = univariate::divmod(g, d).first;
    }
    return {univariate::make_monic(g)};
  }
  return saturation(gens, x, limits_).basis;
}

PolynomialRing::Element PolynomialRing::radical_generator(std::span<const Element> gens) const {
  if (nvars_ != 1) throw Unsupported("canonical radical generators exist only in one variable");
  return univariate::squarefree_part(univariate_gcd_all(gens, field_));
}

// ---------------------------------------------------------------------------

AnyRing parse_ring_selector(std::string_view selector, const Limits& limits) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = selector.find(':', start);
    parts.emplace_back(selector.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto number = [&](const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("bad number '" + text + "' in ring selector '" + std::string(selector) + "'");
    }
    return mpz_class(text);
  };
  if (parts.size() == 1 && parts[0] == "zz") return IntegerRing{};
  if (parts.size() == 2 && parts[0] == "zmod") return ModularRing(number(parts[1]));
  if (parts[0] == "poly" && (parts.size() == 3 || parts.size() == 4)) {
    Field field;
    if (parts.size() == 3 && parts[1] == "q") {
      field = Field::rationals();
    } else if (parts.size() == 4 && parts[1] == "zp") {
      const mpz_class p = number(parts[2]);
      if (!p.fits_uint_p()) throw InvalidInput("field characteristic too large");
      field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
    } else if (parts.size() == 3 && parts[1].starts_with("zp")) {
      const mpz_class p = number(parts[1].substr(2));
      if (!p.fits_uint_p()) throw InvalidInput("field characteristic too large");
      field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
    } else {
      throw InvalidInput("unknown field in ring selector '" + std::string(selector) + "'");
    }
    const mpz_class n = number(parts.back());
    if (!n.fits_uint_p()) throw InvalidInput("too many variables");
    return PolynomialRing(field, n.get_ui(), limits);
  }
  throw InvalidInput("unknown ring selector '" + std::string(selector) + "' (expected zz, zmod:<n> or poly:<field>:<n>)");
}

}  // namespace krullkit
