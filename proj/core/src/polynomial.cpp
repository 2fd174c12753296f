#include "krullkit/polynomial.hpp"

#include <algorithm>
#include <map>

#include "krullkit/detail/expr_parser.hpp"
#include "krullkit/errors.hpp"

namespace krullkit {

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (std::uint32_t{1} << 31)) throw InvalidInput("field characteristic must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Scalar Field::normalize(const Scalar& c) const {
  if (p_ == 0) {
    Scalar r = c;
    r.canonicalize();
    return r;
  }
  const mpz_class p(p_);
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw InvalidInput("denominator vanishes in GF(" + std::to_string(p_) + ")");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num *= inv;
  }
  num %= p;
  if (num < 0) num += p;
  return Scalar(num);
}

Scalar Field::inverse(const Scalar& a) const {
  const Scalar n = normalize(a);
  if (n == 0) throw InvalidInput("division by zero");
  if (p_ == 0) return Scalar(1) / n;
  mpz_class inv;
  const mpz_class p(p_);
  mpz_invert(inv.get_mpz_t(), n.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

std::string Field::to_string(const Scalar& c) const {
  if (p_ == 0) return c.get_str();
  const mpz_class v = normalize(c).get_num();
  if (v > p_ / 2) return "-" + mpz_class(p_ - v).get_str();
  return v.get_str();
}

std::string Field::name() const { return p_ == 0 ? "q" : "zp:" + std::to_string(p_); }

// ---------------------------------------------------------------------------
// Monomials and orders

std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i > lo; --i) {
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::block: {
      const std::size_t k = std::min(block_size, a.size());
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::grevlex();

struct DescendingStorage {
  bool operator()(const Monomial& a, const Monomial& b) const { return kStorageOrder.less(b, a); }
};

}  // namespace

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
  return monomial(field, nvars, Monomial(nvars, 0), c);
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidInput("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(field, nvars, std::move(m), Scalar(1));
}

Polynomial Polynomial::monomial(Field field, std::size_t nvars, Monomial exponents, const Scalar& c) {
  std::vector<Term> terms;
  terms.push_back(Term{std::move(exponents), c});
  return from_terms(field, nvars, std::move(terms));
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Scalar, DescendingStorage> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != nvars) throw InvalidInput("monomial arity does not match the ring");
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Polynomial p(field, nvars);
  for (auto& [m, c] : acc) {
    Scalar r = field.normalize(c);
    if (r != 0) p.terms_.push_back(Term{m, std::move(r)});
  }
  return p;
}

namespace {

struct PolyParseOps {
  Field field;
  std::size_t nvars;

  Polynomial number(const std::string& literal) const {
    Scalar c(literal);
    c.canonicalize();
    return Polynomial::constant(field, nvars, c);
  }
  Polynomial variable(std::string_view name) const {
    if (name.size() >= 2 && name[0] == 'x') {
      const std::string digits(name.substr(1));
      if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
          digits.size() < 6) {
        const std::size_t k = std::stoul(digits);
        if (k >= 1 && k <= nvars) return Polynomial::variable(field, nvars, k - 1);
      }
    }
    throw InvalidInput("unknown variable '" + std::string(name) + "' (ring has x1..x" + std::to_string(nvars) + ")");
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial neg(const Polynomial& a) const { return -a; }
  Polynomial pow(const Polynomial& a, unsigned k) const { return a.pow(k); }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, Field field, std::size_t nvars) {
  return detail::parse_expression<Polynomial>(text, PolyParseOps{field, nvars});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].exponents) == 0);
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && monomial_degree(terms_.back().exponents) == 0) return terms_.back().coeff;
  return Scalar(0);
}

long Polynomial::total_degree() const noexcept {
  // Storage order is degree-compatible.
  return terms_.empty() ? -1 : static_cast<long>(monomial_degree(terms_.front().exponents));
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvalidInput("the zero polynomial has no leading term");
  if (order == kStorageOrder) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.less(best->exponents, t.exponents)) best = &t;
  }
  return *best;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.exponents == m) return t.coeff;
  }
  return Scalar(0);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) throw InvalidInput("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(field_, nvars_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && kStorageOrder.less(o.terms_[j].exponents, terms_[i].exponents))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || kStorageOrder.less(terms_[i].exponents, o.terms_[j].exponents)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = field_.add(terms_[i].coeff, o.terms_[j].coeff);
      if (c != 0) r.terms_.push_back(Term{terms_[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) m[k] = a.exponents[k] + b.exponents[k];
      products.push_back(Term{std::move(m), a.coeff * b.coeff});
    }
  }
  return from_terms(field_, nvars_, std::move(products));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return from_terms(field_, nvars_, std::move(terms));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(field_, nvars_, Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coeff *= d.exponents[var];
    --d.exponents[var];
    terms.push_back(std::move(d));
  }
  return from_terms(field_, nvars_, std::move(terms));
}

Polynomial Polynomial::evaluate(std::span<const Polynomial> values) const {
  if (values.size() != nvars_) throw InvalidInput("evaluation needs one value per variable");
  if (values.empty()) return *this;
  const Field& f = values[0].field();
  const std::size_t n = values[0].nvars();
  for (const auto& v : values) {
    if (!(v.field() == f) || v.nvars() != n) throw InvalidInput("evaluation values from different rings");
  }
  if (!(f == field_)) throw InvalidInput("evaluation values from a different field");
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(f, n, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  Polynomial result(f, n);
  for (const auto& t : terms_) {
    Polynomial term = constant(f, n, t.coeff);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exponents[k] != 0) term = term * power(k, t.exponents[k]);
    }
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::rename(std::size_t nvars, std::span<const std::size_t> target) const {
  if (target.size() != nvars_) throw InvalidInput("rename needs one target per variable");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Monomial m(nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exponents[k] == 0) continue;
      if (target[k] >= nvars) throw InvalidInput("rename target out of range");
      m[target[k]] += t.exponents[k];
    }
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(field_, nvars, std::move(terms));
}

std::string Polynomial::to_string(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string c = field_.to_string(t.coeff);
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exponents[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(prefix) + std::to_string(k + 1);
      if (t.exponents[k] > 1) mono += "^" + std::to_string(t.exponents[k]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate algorithms

namespace univariate {

namespace {

void require_univariate(const Polynomial& f) {
  if (f.nvars() != 1) throw InvalidInput("univariate algorithm applied to a polynomial in " + std::to_string(f.nvars()) + " variables");
}

std::vector<Scalar> dense(const Polynomial& f) {
  std::vector<Scalar> c(static_cast<std::size_t>(f.total_degree() + 1));
  for (const auto& t : f.terms()) c[t.exponents[0]] = t.coeff;
  return c;
}

Polynomial from_dense(const Field& field, const std::vector<Scalar>& c) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] != 0) terms.push_back(Term{Monomial{static_cast<std::uint32_t>(e)}, c[e]});
  }
  return Polynomial::from_terms(field, 1, std::move(terms));
}

}  // namespace

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scale(f.field().inverse(f.terms().front().coeff));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_univariate(a);
  require_univariate(b);
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const Field& field = a.field();
  std::vector<Scalar> r = dense(a);
  const std::vector<Scalar> d = dense(b);
  const std::size_t db = d.size() - 1;
  const Scalar lead_inv = field.inverse(d.back());
  std::vector<Scalar> q(r.size() >= d.size() ? r.size() - db : 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Scalar c = field.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) r[i - db + k] = field.sub(r[i - db + k], field.mul(c, d[k]));
  }
  return {from_dense(field, q), from_dense(field, r)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& field = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(field, 1, 1), s1(field, 1);
  Polynomial t0(field, 1), t1 = Polynomial::constant(field, 1, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = field.inverse(r0.terms().front().coeff);
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

Polynomial squarefree_part(const Polynomial& f) {
  require_univariate(f);
  const Field& field = f.field();
  if (f.is_zero()) return f;
  if (f.is_constant()) return Polynomial::constant(field, 1, 1);
  const Polynomial g = make_monic(f);
  const Polynomial d = g.derivative(0);
  if (d.is_zero()) {
    // g = h(x^p) = h(x)^p over GF(p), since Frobenius fixes GF(p).
    const std::uint32_t p = field.characteristic();
    std::vector<Term> root;
    for (const auto& t : g.terms()) root.push_back(Term{Monomial{t.exponents[0] / p}, t.coeff});
    return squarefree_part(Polynomial::from_terms(field, 1, std::move(root)));
  }
  const Polynomial u = gcd(g, d);
  const Polynomial w = divmod(g, u).first;
  if (u.is_constant()) return make_monic(w);
  const Polynomial ru = squarefree_part(u);
  return make_monic(divmod(w * ru, gcd(w, ru)).first);
}

}  // namespace univariate

}  // namespace krullkit
