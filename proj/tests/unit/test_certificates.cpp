#include "doctest.h"
#include "generators.hpp"
#include "krullkit/certificates.hpp"
#include "krullkit/errors.hpp"

using namespace krullkit;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Brute force over m ∈ [0, max_m]^l and a ∈ [-bound, bound]^l.
bool integer_brute_force(const IntegerRing& zz, const std::vector<mpz_class>& xs, unsigned max_m, long bound) {
  const std::size_t l = xs.size();
  SingularityCertificate<mpz_class> cert{std::vector<unsigned>(l, 0), std::vector<mpz_class>(l, -bound)};
  while (true) {
    if (verify_certificate(zz, std::span<const mpz_class>(xs), cert)) return true;
    std::size_t pos = 0;
    while (pos < l && cert.a[pos] == bound) cert.a[pos++] = -bound;
    if (pos < l) {
      ++cert.a[pos];
      continue;
    }
    pos = 0;
    while (pos < l && cert.m[pos] == max_m) cert.m[pos++] = 0;
    if (pos == l) return false;
    ++cert.m[pos];
  }
}

}  // namespace

TEST_CASE("verify_certificate") {
  const IntegerRing zz;
  const auto xs = Z({2, 3});
  CHECK(verify_certificate(zz, std::span<const mpz_class>(xs), SingularityCertificate<mpz_class>{{0, 0}, Z({-2, 1})}));
  CHECK_FALSE(verify_certificate(zz, std::span<const mpz_class>(xs), SingularityCertificate<mpz_class>{{0, 0}, Z({-2, 2})}));
  CHECK_THROWS_AS(verify_certificate(zz, std::span<const mpz_class>(xs), SingularityCertificate<mpz_class>{{0}, Z({-2})}),
                  InvalidInput);

  const PolynomialRing f5(Field::prime(5), 0);
  const std::vector<Polynomial> two{f5.parse("2")};
  CHECK(verify_certificate(f5, std::span<const Polynomial>(two), SingularityCertificate<Polynomial>{{0}, {f5.parse("2")}}));
}

TEST_CASE("certificate search") {
  const IntegerRing zz;
  SUBCASE("integers") {
    const auto xs = Z({2, 3});
    const auto c = search_certificate(zz, std::span<const mpz_class>(xs));
    REQUIRE(c.has_value());
    CHECK(c->m == std::vector<unsigned>{0, 0});
    CHECK(c->a == Z({-2, 1}));
  }
  SUBCASE("a zero in the first position") {
    const auto xs = Z({0, 5});
    const auto c = search_certificate(zz, std::span<const mpz_class>(xs));
    REQUIRE(c.has_value());
    CHECK(c->m == std::vector<unsigned>{1, 0});
    CHECK(c->a == Z({0, 0}));
  }
  SUBCASE("a single variable is not singular") {
    const PolynomialRing r(Field::prime(5), 1);
    const std::vector<Polynomial> xs{r.variable(0)};
    CHECK_FALSE(search_certificate(r, std::span<const Polynomial>(xs)).has_value());
    SearchBounds bounds;
    bounds.max_exponent = 2;
    bounds.escalate = true;
    bounds.hard_cap = 16;
    CHECK_FALSE(search_certificate(r, std::span<const Polynomial>(xs), bounds).has_value());
  }
  SUBCASE("search space cap") {
    Limits limits;
    limits.max_search = 10;
    const auto xs = Z({2, 3, 5});
    CHECK_THROWS_AS(search_certificate(zz, std::span<const mpz_class>(xs), SearchBounds{}, limits), ResourceLimit);
  }
  SUBCASE("agrees with brute force over small integers") {
    testgen::Rng rng(1);
    SearchBounds bounds;
    bounds.max_exponent = 2;
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<mpz_class> xs(testgen::uniform(rng, 1, 2));
      for (auto& x : xs) x = static_cast<long>(testgen::uniform(rng, 0, 12)) - 6;
      const auto found = search_certificate(zz, std::span<const mpz_class>(xs), bounds);
      if (integer_brute_force(zz, xs, 2, 6)) CHECK(found.has_value());
      if (found) CHECK(verify_certificate(zz, std::span<const mpz_class>(xs), *found));
    }
  }
  SUBCASE("every element of Z/n is singular") {
    for (long n : {4L, 6L, 12L}) {
      const ModularRing ring(n);
      for (long x = 0; x < n; ++x) {
        const auto xs = Z({x});
        SearchBounds bounds;
        bounds.max_exponent = 4;
        const auto c = search_certificate(ring, std::span<const mpz_class>(xs), bounds);
        REQUIRE(c.has_value());
        CHECK(verify_certificate(ring, std::span<const mpz_class>(xs), *c));
      }
    }
  }
}

TEST_CASE("certificates from dependence relations") {
  const Field f5 = Field::prime(5);
  const PolynomialRing r(f5, 1);
  const auto x = r.variable(0);
  SUBCASE("x, x^2") {
    const std::vector<Polynomial> xs{x, x * x};
    const auto c = certificate_from_dependence(r, Polynomial::parse("x2 - x1^2", f5, 2), xs);
    CHECK(c.m == std::vector<unsigned>{0, 1});
    CHECK(c.a == std::vector<Polynomial>{-x, r.zero()});
  }
  SUBCASE("zero element") {
    const std::vector<Polynomial> xs{r.zero()};
    const auto c = certificate_from_dependence(r, Polynomial::parse("x1", f5, 1), xs);
    CHECK(c.m == std::vector<unsigned>{1});
    CHECK(c.a == std::vector<Polynomial>{r.zero()});
  }
  SUBCASE("constant term") {
    const std::vector<Polynomial> xs{x, x + r.one()};
    const auto c = certificate_from_dependence(r, Polynomial::parse("x2 - x1 - 1", f5, 2), xs);
    CHECK(c.m == std::vector<unsigned>{0, 0});
    CHECK(c.a == std::vector<Polynomial>{r.one(), -r.one()});
  }
  SUBCASE("bad relations") {
    const std::vector<Polynomial> xs{x, x * x};
    CHECK_THROWS_AS(certificate_from_dependence(r, Polynomial::parse("x2 - x1", f5, 2), xs), InvalidInput);
    CHECK_THROWS_AS(certificate_from_dependence(r, Polynomial(f5, 2), xs), InvalidInput);
    CHECK_THROWS_AS(certificate_from_dependence(r, Polynomial::parse("x1", f5, 1), xs), InvalidInput);
  }
  SUBCASE("dependence of random univariate pairs") {
    testgen::Rng rng(2);
    for (int trial = 0; trial < 40; ++trial) {
      const std::vector<Polynomial> xs{testgen::random_polynomial(rng, f5, 1, 2, 2),
                                       testgen::random_polynomial(rng, f5, 1, 2, 2)};
      const auto q = algebraic_dependence(r, xs);
      REQUIRE(q.has_value());
      CHECK_FALSE(q->is_zero());
      CHECK(q->evaluate(xs).is_zero());
      const auto c = certificate_from_dependence(r, *q, xs);
      CHECK(verify_certificate(r, std::span<const Polynomial>(xs), c));
    }
  }
  SUBCASE("independent elements") {
    const PolynomialRing r2(f5, 2);
    const std::vector<Polynomial> xs{r2.variable(0), r2.variable(1)};
    CHECK_FALSE(algebraic_dependence(r2, xs).has_value());
    const std::vector<Polynomial> single{x};
    CHECK_FALSE(algebraic_dependence(r, single).has_value());
    const auto q = algebraic_dependence(r, std::vector<Polynomial>{x, x * x});
    REQUIRE(q.has_value());
    CHECK(q->total_degree() == 2);
  }
}

TEST_CASE("field and integer certificates") {
  const PolynomialRing f5(Field::prime(5), 0);
  for (long v = 0; v < 5; ++v) {
    const std::vector<Polynomial> xs{f5.from_integer(v)};
    const auto c = field_cert(f5, xs);
    CHECK(verify_certificate(f5, std::span<const Polynomial>(xs), c));
    if (v == 2) CHECK(c.a[0] == f5.parse("2"));
  }
  CHECK_THROWS_AS(field_cert(PolynomialRing(Field::prime(5), 1), std::vector<Polynomial>{}), InvalidInput);

  const IntegerRing zz;
  const auto c = integer_cert(zz, Z({4, 6}));
  CHECK(c.m == std::vector<unsigned>{0, 2});
  CHECK(c.a == Z({-9, 0}));
  const auto zero = integer_cert(zz, Z({0, 7}));
  CHECK(zero.m == std::vector<unsigned>{1, 0});
  CHECK_THROWS_AS(integer_cert(zz, Z({1})), InvalidInput);
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      const auto xs = Z({a, b});
      CHECK(verify_certificate(zz, std::span<const mpz_class>(xs), integer_cert(zz, xs)));
    }
  }
}

TEST_CASE("collapse forms") {
  const IntegerRing zz;
  SUBCASE("chain over the integers") {
    CollapseForm1<mpz_class> d;
    d.chain.j = {{}, Z({2}), Z({3})};
    d.chain.u = {Z({2}), Z({3}), {}};
    d.u_exponents = {{0}, {0}, {}};
    d.j_cofactors = {{}, Z({-2}), Z({1})};
    CHECK(verify_form1(zz, d));
    const auto f3 = collapse_1_to_3(zz, d);
    CHECK(verify_form3(zz, f3));
    CHECK(verify_form1(zz, collapse_3_to_1(zz, f3)));
    auto bad = d;
    bad.j_cofactors[1][0] = 5;
    CHECK_FALSE(verify_form1(zz, bad));
    CHECK_THROWS_AS(collapse_1_to_3(zz, bad), InvalidInput);
    auto shape = d;
    shape.u_exponents.pop_back();
    CHECK_THROWS_AS(verify_form1(zz, shape), InvalidInput);
  }
  SUBCASE("round trips from integer certificates") {
    testgen::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto xs = Z({static_cast<long>(testgen::uniform(rng, 0, 60)) - 30, static_cast<long>(testgen::uniform(rng, 0, 60)) - 30});
      const auto f1 = form1_from_singularity(zz, std::span<const mpz_class>(xs), integer_cert(zz, xs));
      const auto f3 = collapse_1_to_3(zz, f1);
      CHECK(verify_form3(zz, f3));
      const auto back = collapse_3_to_1(zz, f3);
      CHECK(verify_form1(zz, back));
      CHECK(verify_form3(zz, collapse_1_to_3(zz, back)));
    }
  }
  SUBCASE("form 3 with higher powers") {
    CollapseForm3<mpz_class> d;
    d.chain.j = {Z({8}), Z({})};
    d.chain.u = {Z({}), Z({2})};
    d.xs = Z({2});
    // Line 0: 2^3 = 1·8. Line 1: 2^1 = 1·2.
    d.lines = {Form3Line<mpz_class>{{}, 3, Z({1}), 0}, Form3Line<mpz_class>{{1}, 0, {}, 1}};
    REQUIRE(verify_form3(zz, d));
    const auto f1 = collapse_3_to_1(zz, d);
    CHECK(verify_form1(zz, f1));
    auto bad = d;
    bad.lines[0].next_exponent = 2;
    CHECK_THROWS_AS(collapse_3_to_1(zz, bad), InvalidInput);
  }
  SUBCASE("polynomial chains from dependence") {
    const Field f5 = Field::prime(5);
    const PolynomialRing r(f5, 1);
    testgen::Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<Polynomial> xs{testgen::random_polynomial(rng, f5, 1, 2, 2),
                                       testgen::random_polynomial(rng, f5, 1, 2, 2)};
      const auto q = algebraic_dependence(r, xs);
      REQUIRE(q.has_value());
      const auto f1 = form1_from_singularity(r, std::span<const Polynomial>(xs), certificate_from_dependence(r, *q, xs));
      const auto f3 = collapse_1_to_3(r, f1);
      CHECK(verify_form1(r, collapse_3_to_1(r, f3)));
    }
  }
}
