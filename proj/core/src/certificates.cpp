#include "krullkit/certificates.hpp"

#include "krullkit/groebner.hpp"

namespace krullkit {

SingularityCertificate<Polynomial> certificate_from_dependence(const PolynomialRing& ring, const Polynomial& q,
                                                               std::span<const Polynomial> xs) {
  const std::size_t l = xs.size();
  if (q.nvars() != l) throw InvalidInput("relation has " + std::to_string(q.nvars()) + " variables for a sequence of length " + std::to_string(l));
  if (!(q.field() == ring.field())) throw InvalidInput("relation and ring have different fields");
  if (q.is_zero()) throw InvalidInput("the zero polynomial is not a dependence relation");
  for (const auto& x : xs) {
    if (!(x.field() == ring.field()) || x.nvars() != ring.nvars()) throw InvalidInput("sequence element outside the ring");
  }
  if (l == 0 || !q.evaluate(xs).is_zero()) throw InvalidInput("relation does not vanish on the sequence");

  const MonomialOrder lex = MonomialOrder::lex();
  const Term* least = &q.terms().front();
  for (const auto& t : q.terms()) {
    if (lex.less(t.exponents, least->exponents)) least = &t;
  }
  const Field& field = ring.field();
  const Scalar scale = field.inverse(least->coeff);
  const Monomial m = least->exponents;

  std::vector<std::vector<Term>> parts(l);
  for (const auto& t : q.terms()) {
    if (t.exponents == m) continue;
    std::size_t i = 0;
    while (t.exponents[i] <= m[i]) ++i;  // exists: t is lex-greater than m
    Monomial rest = t.exponents;
    for (std::size_t k = 0; k < i; ++k) rest[k] = 0;
    rest[i] -= m[i] + 1;
    parts[i].push_back(Term{std::move(rest), field.mul(t.coeff, scale)});
  }
  SingularityCertificate<Polynomial> cert;
  for (std::size_t i = 0; i < l; ++i) {
    cert.m.push_back(m[i]);
    cert.a.push_back(Polynomial::from_terms(field, l, std::move(parts[i])).evaluate(xs));
  }
  if (!verify_certificate(ring, xs, cert)) throw VerificationFailure("certificate from a dependence relation does not verify");
  return cert;
}

std::optional<Polynomial> algebraic_dependence(const PolynomialRing& ring, std::span<const Polynomial> fs) {
  const std::size_t n = ring.nvars();
  const std::size_t k = fs.size();
  const Field& field = ring.field();
  if (k == 0) return std::nullopt;

  std::vector<std::size_t> lift(n);
  for (std::size_t v = 0; v < n; ++v) lift[v] = v;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(fs[i].field() == field) || fs[i].nvars() != n) throw InvalidInput("polynomial outside the ring");
    gens.push_back(Polynomial::variable(field, n + k, n + i) - fs[i].rename(n + k, lift));
  }
  std::vector<std::size_t> xs(n);
  for (std::size_t v = 0; v < n; ++v) xs[v] = v;
  const IdealBasis relations = eliminate(gens, xs, ring.limits());

  std::vector<std::size_t> down(n + k, 0);
  for (std::size_t i = 0; i < k; ++i) down[n + i] = i;
  std::optional<Polynomial> best;
  for (const auto& g : relations.basis) {
    if (g.is_zero()) continue;
    Polynomial q = g.rename(k, down);
    if (!best || q.total_degree() < best->total_degree()) best = std::move(q);
  }
  if (best && !best->evaluate(fs).is_zero()) throw VerificationFailure("dependence relation does not vanish");
  return best;
}

SingularityCertificate<Polynomial> field_cert(const PolynomialRing& field, std::span<const Polynomial> xs) {
  if (field.nvars() != 0) throw InvalidInput("field certificates need a ring without variables");
  if (xs.size() != 1) throw InvalidInput("field certificates take a sequence of length 1");
  SingularityCertificate<Polynomial> cert;
  if (xs[0].is_zero()) {
    cert = {{1}, {field.zero()}};
  } else {
    const Scalar inv = field.field().inverse(xs[0].constant_term());
    cert = {{0}, {Polynomial::constant(field.field(), 0, field.field().neg(inv))}};
  }
  if (!verify_certificate(field, xs, cert)) throw VerificationFailure("field certificate does not verify");
  return cert;
}

SingularityCertificate<mpz_class> integer_cert(const IntegerRing& ring, std::span<const mpz_class> xs) {
  if (xs.size() != 2) throw InvalidInput("integer certificates take a sequence of length 2");
  const mpz_class& x1 = xs[0];
  const mpz_class& x2 = xs[1];
  SingularityCertificate<mpz_class> cert;
  if (x1 == 0) {
    cert = {{1, 0}, {0, 0}};
  } else {
    // |x1| = u·v with v coprime to x2 and every prime of u dividing x2.
    mpz_class v = abs(x1);
    for (mpz_class d = gcd(v, x2); d > 1; d = gcd(v, x2)) v /= d;
    const mpz_class u = abs(x1) / v;
    unsigned m2 = 0;
    mpz_class power = 1;
    while (power % u != 0) {
      power *= x2;
      ++m2;
    }
    mpz_class a2 = 0;
    if (v != 1) {
      mpz_class inv;
      mpz_class x2_mod = x2 % v;
      mpz_invert(inv.get_mpz_t(), x2_mod.get_mpz_t(), v.get_mpz_t());
      a2 = -inv;
    }
    const mpz_class numerator = power * (1 + a2 * x2);
    if (numerator % x1 != 0) throw VerificationFailure("integer certificate construction failed");
    cert = {{0, m2}, {-numerator / x1, a2}};
  }
  if (!verify_certificate(ring, xs, cert)) throw VerificationFailure("integer certificate does not verify");
  return cert;
}

}  // namespace krullkit
