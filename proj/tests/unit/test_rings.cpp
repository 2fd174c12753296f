#include <numeric>

#include "doctest.h"
#include "generators.hpp"
#include "krullkit/errors.hpp"
#include "krullkit/ring.hpp"
#include "oracles.hpp"

using namespace krullkit;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("integers") {
  const IntegerRing zz;
  CHECK_FALSE(zz.radical_member(3, Z({2})));
  CHECK(zz.radical_member(6, Z({2, 3})));
  CHECK(zz.radical_member(4, Z({2})));
  CHECK(zz.radical_member(0, Z({})));
  CHECK_FALSE(zz.radical_member(1, Z({})));
  CHECK(zz.radical_member(5, Z({0, 1})));
  CHECK(zz.parse(" -42 ") == -42);
  CHECK_THROWS_AS(zz.parse("4x"), InvalidInput);
  CHECK(zz.radical_generator(Z({12, 18})) == 6);

  SUBCASE("radical membership against bounded power search") {
    testgen::Rng rng(1);
    for (int trial = 0; trial < 500; ++trial) {
      const mpz_class f = static_cast<long>(testgen::uniform(rng, 0, 120)) - 60;
      std::vector<mpz_class> gens(testgen::uniform(rng, 0, 3));
      for (auto& g : gens) g = static_cast<long>(testgen::uniform(rng, 0, 200)) - 100;
      // Exponents of primes below 200 stay under 8, so k = 8 suffices.
      CHECK(zz.radical_member(f, gens) == oracle::integer_power_search(f, gens, 8));
    }
  }
  SUBCASE("cofactors") {
    const auto c = zz.ideal_cofactors(1, Z({6, 10, 15}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] * 6 + (*c)[1] * 10 + (*c)[2] * 15 == 1);
    CHECK_FALSE(zz.ideal_cofactors(3, Z({6})).has_value());
    CHECK(zz.ideal_cofactors(0, Z({})).has_value());
  }
  SUBCASE("saturation") {
    CHECK(zz.radical_member(3, zz.saturate(Z({6}), 2)));
    CHECK_FALSE(zz.radical_member(2, zz.saturate(Z({6}), 2)));
    // (⟨12⟩ : 2^∞) = ⟨3⟩, (⟨0⟩ : 2^∞) = ⟨0⟩, (⟨6⟩ : 0^∞) = ⟨1⟩.
    const auto s = zz.saturate(Z({12}), 2);
    REQUIRE(s.size() == 1);
    CHECK(abs(s[0]) == 3);
    for (const auto& g : zz.saturate(Z({0}), 2)) CHECK(g == 0);
    CHECK(zz.radical_member(1, zz.saturate(Z({6}), 0)));
  }
  SUBCASE("enumeration") {
    std::vector<mpz_class> first;
    for (std::size_t i = 0; i < 5; ++i) first.push_back(*zz.enumerate(i));
    CHECK(first == Z({0, 1, -1, 2, -2}));
  }
}

TEST_CASE("integers modulo n") {
  CHECK_THROWS_AS(ModularRing(1), InvalidInput);
  const ModularRing z12(12);
  CHECK(z12.radical_member(6, Z({2})));
  CHECK(z12.radical_member(6, Z({0})));
  CHECK_FALSE(z12.radical_member(2, Z({0})));
  CHECK(z12.radical_member(1, Z({5})));
  CHECK(z12.parse("-1") == 11);
  CHECK(*z12.enumerate(11) == 11);
  CHECK_FALSE(z12.enumerate(12).has_value());

  for (long n : {2L, 4L, 6L, 12L, 30L, 9L, 25L}) {
    const ModularRing ring(n);
    for (long f = 0; f < n; ++f) {
      for (long g = 0; g < n; ++g) {
        CHECK(ring.radical_member(f, Z({g})) == oracle::modular_power_search(f, {g}, n));
        for (long h = 0; h < n; h += 3) {
          CHECK(ring.radical_member(f, Z({g, h})) == oracle::modular_power_search(f, {g, h}, n));
        }
        const auto c = ring.ideal_cofactors(f, Z({g}));
        if (c) CHECK(ring.equal(ring.mul((*c)[0], g), f));
        CHECK(c.has_value() == (f % std::gcd(g, n) == 0));
      }
      // Saturation: h ∈ (⟨g⟩ : f^∞) iff h f^k ∈ ⟨g⟩.
      for (long g = 0; g < n; ++g) {
        const auto s = ring.saturate(Z({g}), f);
        for (long h = 0; h < n; ++h) {
          bool member = false;
          long power = 1 % n;
          for (long k = 0; k <= n && !member; ++k) {
            member = ring.ideal_cofactors(mpz_class((h * power) % n), Z({g})).has_value();
            power = (power * f) % n;
          }
          CHECK(ring.ideal_cofactors(h, s).has_value() == member);
        }
      }
    }
  }
}

TEST_CASE("polynomial rings") {
  const PolynomialRing k(Field::prime(5), 0);
  CHECK(k.radical_member(k.parse("2"), std::vector<Polynomial>{k.parse("3")}));
  CHECK_FALSE(k.radical_member(k.parse("2"), std::vector<Polynomial>{k.parse("0")}));

  const PolynomialRing r1(Field::prime(5), 1);
  const auto x = r1.variable(0);
  CHECK(r1.radical_member(x, std::vector<Polynomial>{x * x}));
  CHECK_FALSE(r1.radical_member(x + r1.one(), std::vector<Polynomial>{x * x}));
  CHECK(r1.radical_generator(std::vector<Polynomial>{r1.parse("x1^5 - x1^10"), r1.parse("x1^7")}) == x);
  CHECK(r1.name() == "poly:zp:5:1");

  const PolynomialRing r2(Field::rationals(), 2);
  const std::vector<Polynomial> xy{r2.parse("x1*x2")};
  const auto sat = r2.saturate(xy, r2.variable(0));
  REQUIRE(sat.size() == 1);
  CHECK(sat[0] == r2.variable(1));

  SUBCASE("univariate radical membership against power search") {
    testgen::Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Polynomial> gens(testgen::uniform(rng, 1, 2));
      for (auto& g : gens) g = testgen::random_polynomial(rng, Field::prime(5), 1, 3, 3).pow(testgen::uniform(rng, 1, 3));
      const auto f = testgen::random_polynomial(rng, Field::prime(5), 1, 2, 2);
      bool power_member = false;
      Polynomial power = r1.one();
      for (int k = 0; k <= 12 && !power_member; ++k) {
        power_member = r1.ideal_cofactors(power, gens).has_value();
        power = power * f;
      }
      CHECK(r1.radical_member(f, gens) == power_member);
    }
  }
  SUBCASE("univariate saturation") {
    testgen::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = testgen::random_polynomial(rng, Field::prime(5), 1, 4, 3);
      const auto f = testgen::random_polynomial(rng, Field::prime(5), 1, 2, 2);
      const std::vector<Polynomial> gens{g};
      const auto s = r1.saturate(gens, f);
      const auto h = testgen::random_polynomial(rng, Field::prime(5), 1, 3, 3);
      bool member = false;
      Polynomial power = r1.one();
      for (int k = 0; k <= 8 && !member; ++k) {
        member = r1.ideal_cofactors(h * power, gens).has_value();
        power = power * f;
      }
      CHECK(r1.ideal_cofactors(h, s).has_value() == member);
    }
  }
  SUBCASE("cofactors verify") {
    const auto c = r1.ideal_cofactors(r1.one(), std::vector<Polynomial>{x, x + r1.one()});
    REQUIRE(c.has_value());
    CHECK((*c)[0] * x + (*c)[1] * (x + r1.one()) == r1.one());
  }
}

TEST_CASE("ring selectors") {
  CHECK(std::holds_alternative<IntegerRing>(parse_ring_selector("zz")));
  const auto m = parse_ring_selector("zmod:12");
  REQUIRE(std::holds_alternative<ModularRing>(m));
  CHECK(std::get<ModularRing>(m).modulus() == 12);
  for (const char* s : {"poly:zp:5:2", "poly:zp5:2"}) {
    const auto p = parse_ring_selector(s);
    REQUIRE(std::holds_alternative<PolynomialRing>(p));
    CHECK(std::get<PolynomialRing>(p).field() == Field::prime(5));
    CHECK(std::get<PolynomialRing>(p).nvars() == 2);
  }
  CHECK(std::get<PolynomialRing>(parse_ring_selector("poly:q:1")).field() == Field::rationals());
  for (const char* bad : {"", "zq", "zmod:1", "zmod:x", "poly:zp:6:1", "poly:r:1", "poly:q", "poly:q:-1"}) {
    CHECK_THROWS_AS(parse_ring_selector(bad), InvalidInput);
  }
}
