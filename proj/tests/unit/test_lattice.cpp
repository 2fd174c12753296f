#include <algorithm>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "krullkit/errors.hpp"
#include "krullkit/lattice.hpp"
#include "oracles.hpp"

using namespace krullkit;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> xs) {
  return xs;
}

// Raw tables for a lattice given by a set of subsets of {0..k-1} closed under
// ∩ and ∪.
struct Tables {
  std::vector<std::vector<std::size_t>> meet, join;
};

Tables tables_of(const std::vector<unsigned>& sets) {
  const std::size_t n = sets.size();
  auto find = [&](unsigned s) { return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), s) - sets.begin()); };
  Tables t{std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)), std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.meet[a][b] = find(sets[a] & sets[b]);
      t.join[a][b] = find(sets[a] | sets[b]);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("poset construction keeps the transitive reduction and rejects cycles") {
  const auto p = Poset::from_covers(3, pairs({{0, 1}, {1, 2}, {0, 2}}));
  CHECK(p.covers() == pairs({{0, 1}, {1, 2}}));
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK_THROWS_AS(Poset::from_covers(2, pairs({{0, 1}, {1, 0}})), InvalidInput);
  CHECK_THROWS_AS(Poset::from_covers(2, pairs({{0, 0}})), InvalidInput);
  CHECK_THROWS_AS(Poset::from_covers(2, pairs({{0, 2}})), InvalidInput);
}

TEST_CASE("Birkhoff construction yields exactly the downsets") {
  SUBCASE("empty poset is the one-element lattice") {
    const auto L = lattice_from_poset(Poset{});
    CHECK(L.size() == 1);
    CHECK(L.bottom() == L.top());
    CHECK(L.is_trivial());
  }
  SUBCASE("two-point antichain") {
    const auto L = lattice_from_poset(Poset::antichain(2));
    CHECK(L.size() == 4);
  }
  SUBCASE("two-point chain") {
    const auto L = lattice_from_poset(Poset::chain(2));
    CHECK(L.size() == 3);
  }
  SUBCASE("random posets against subset enumeration") {
    testgen::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t points = testgen::uniform(rng, 0, 7);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
      for (std::uint32_t i = 0; i < points; ++i) {
        for (std::uint32_t j = i + 1; j < points; ++j) {
          if (testgen::coin(rng, 0.3)) covers.emplace_back(i, j);
        }
      }
      const auto L = lattice_from_poset(Poset::from_covers(points, covers));
      const auto expected = oracle::downsets(points, covers);
      std::set<std::uint64_t> got;
      for (Elem e : L.elements()) got.insert(e.bits);
      CHECK(got == std::set<std::uint64_t>(expected.begin(), expected.end()));
      CHECK(L.bottom().bits == 0);
      CHECK(L.top().bits == (points == 64 ? ~0ull : (1ull << points) - 1));
    }
  }
}

TEST_CASE("elements are listed in canonical order") {
  testgen::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto L = testgen::random_lattice(rng, 64);
    const auto els = L.elements();
    CHECK(std::is_sorted(els.begin(), els.end(), canonical_less));
    CHECK(els.front() == L.bottom());
    CHECK(els.back() == L.top());
    for (std::size_t i = 0; i < els.size(); ++i) CHECK(L.index_of(els[i]) == i);
  }
}

TEST_CASE("lattice laws hold on random lattices") {
  testgen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto L = testgen::random_lattice(rng, 24);
    for (Elem a : L.elements()) {
      for (Elem b : L.elements()) {
        CHECK(L.contains(L.meet(a, b)));
        CHECK(L.contains(L.join(a, b)));
        for (Elem c : L.elements()) {
          CHECK(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)));
          CHECK(L.join(a, L.meet(b, c)) == L.meet(L.join(a, b), L.join(a, c)));
          // Cut: x ∧ a <= b and a <= x ∨ b give a <= b (here x = c).
          if (L.leq(L.meet(c, a), b) && L.leq(a, L.join(c, b))) CHECK(L.leq(a, b));
          // Residuation.
          CHECK(L.leq(L.meet(c, a), b) == L.leq(c, heyting_implies(L, a, b)));
        }
      }
    }
  }
}

TEST_CASE("Heyting implication") {
  const auto L = chain_lattice(3);
  const Elem m = L.element(1);
  CHECK(L.implies(m, m) == L.top());
  CHECK(L.implies(L.top(), m) == m);
  CHECK(L.implies(m, L.bottom()) == L.bottom());
  CHECK(L.negation(m) == L.bottom());

  testgen::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto K = testgen::random_lattice(rng, 32);
    for (Elem a : K.elements()) {
      for (Elem b : K.elements()) CHECK(K.implies(a, b) == oracle::implies(K, a, b));
    }
  }
}

TEST_CASE("raw tables are validated") {
  SUBCASE("two-element chain") {
    const auto t = tables_of({0, 1});
    const auto imported = validate_raw_lattice(t.meet, t.join);
    CHECK(imported.lattice.size() == 2);
    CHECK(imported.image[0] == imported.lattice.bottom());
    CHECK(imported.image[1] == imported.lattice.top());
  }
  SUBCASE("diamond M3 fails distributivity") {
    // 0, a, b, c, 1 with a, b, c pairwise meeting in 0 and joining to 1.
    std::vector<std::vector<std::size_t>> meet(5, std::vector<std::size_t>(5)), join(5, std::vector<std::size_t>(5));
    for (std::size_t x = 0; x < 5; ++x) {
      for (std::size_t y = 0; y < 5; ++y) {
        if (x == y) {
          meet[x][y] = join[x][y] = x;
        } else if (x == 0 || y == 0) {
          meet[x][y] = 0;
          join[x][y] = x + y;
        } else if (x == 4 || y == 4) {
          meet[x][y] = std::min(x, y);
          join[x][y] = 4;
        } else {
          meet[x][y] = 0;
          join[x][y] = 4;
        }
      }
    }
    try {
      validate_raw_lattice(meet, join);
      FAIL("expected a distributivity failure");
    } catch (const LatticeAxiomError& e) {
      CHECK(std::string(e.what()).find("distributiv") != std::string::npos);
    }
  }
  SUBCASE("pentagon N5 fails distributivity") {
    // 0 < a < b < 1 and 0 < c < 1, c incomparable with a, b.
    const std::vector<std::vector<std::size_t>> meet = {
        {0, 0, 0, 0, 0}, {0, 1, 1, 0, 1}, {0, 1, 2, 0, 2}, {0, 0, 0, 3, 3}, {0, 1, 2, 3, 4}};
    const std::vector<std::vector<std::size_t>> join = {
        {0, 1, 2, 3, 4}, {1, 1, 2, 4, 4}, {2, 2, 2, 4, 4}, {3, 4, 4, 3, 4}, {4, 4, 4, 4, 4}};
    CHECK_THROWS_AS(validate_raw_lattice(meet, join), LatticeAxiomError);
  }
  SUBCASE("tables with a broken law name the law") {
    std::vector<std::vector<std::size_t>> meet = {{0, 0}, {0, 1}}, join = {{0, 1}, {1, 1}};
    meet[0][1] = 1;  // not commutative
    CHECK_THROWS_AS(validate_raw_lattice(meet, join), LatticeAxiomError);
  }
  SUBCASE("random set lattices round-trip") {
    testgen::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
      const auto L = testgen::random_lattice(rng, 20);
      std::vector<unsigned> sets;
      for (Elem e : L.elements()) sets.push_back(static_cast<unsigned>(e.bits));
      std::shuffle(sets.begin(), sets.end(), rng);
      const auto t = tables_of(sets);
      const auto imported = validate_raw_lattice(t.meet, t.join);
      REQUIRE(imported.lattice.size() == L.size());
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = 0; b < sets.size(); ++b) {
          const bool below = (sets[a] & ~sets[b]) == 0;
          CHECK(imported.lattice.leq(imported.image[a], imported.image[b]) == below);
        }
      }
    }
  }
}

TEST_CASE("spectrum enumeration") {
  CHECK(spec_enumerate(chain_lattice(3)).size() == 2);
  CHECK(spec_enumerate(boolean_lattice(2)).size() == 2);
  CHECK(spec_enumerate(chain_lattice(1)).empty());
  for (std::size_t k = 2; k <= 8; ++k) CHECK(spec_enumerate(chain_lattice(k)).size() == k - 1);

  testgen::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto L = testgen::random_lattice(rng, 16);
    const auto points = spec_enumerate(L);
    auto expected = oracle::spectrum(L);
    std::vector<std::vector<bool>> got;
    for (const auto& p : points) got.push_back(p.kernel);
    for (std::size_t i = 1; i < got.size(); ++i) {
      // Larger kernels first.
      CHECK(std::count(got[i - 1].begin(), got[i - 1].end(), true) >= std::count(got[i].begin(), got[i].end(), true));
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    for (const auto& p : points) {
      CHECK_FALSE(p.in_kernel(L.index_of(L.top())));
      for (Elem x : L.elements()) {
        for (Elem y : L.elements()) {
          if (p.in_kernel(L.index_of(L.meet(x, y)))) {
            CHECK((p.in_kernel(L.index_of(x)) || p.in_kernel(L.index_of(y))));
          }
        }
      }
    }
  }
}

TEST_CASE("constructors") {
  CHECK(chain_lattice(2).size() == 2);
  CHECK(chain_lattice(6).size() == 6);
  CHECK_THROWS_AS(chain_lattice(0), InvalidInput);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(boolean_lattice(n).size() == (std::size_t{1} << n));
  CHECK(product(chain_lattice(2), chain_lattice(3)).size() == 6);

  // boolean_lattice(2) ≅ 2 × 2: the order relations match under product_pair.
  const auto two = chain_lattice(2);
  const auto sq = product(two, two);
  const auto b2 = boolean_lattice(2);
  CHECK(sq.size() == b2.size());
  std::vector<Elem> image;
  for (Elem a : two.elements()) {
    for (Elem b : two.elements()) image.push_back(product_pair(two, a, b));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool componentwise = two.leq(two.element(i / 2), two.element(j / 2)) && two.leq(two.element(i % 2), two.element(j % 2));
      CHECK(sq.leq(image[i], image[j]) == componentwise);
    }
  }
}

TEST_CASE("element names") {
  const auto L = chain_lattice(3);
  CHECK(FiniteDistLattice::name(L.element(1)) == "0x1");
  CHECK(L.parse_name("0x3") == L.top());
  CHECK(L.parse_name("1") == L.element(1));
  CHECK_THROWS_AS(L.parse_name("0x2"), InvalidInput);
  CHECK_THROWS_AS(L.parse_name("zz"), InvalidInput);
}

TEST_CASE("size cap") {
  Limits limits;
  limits.max_lattice_elements = 10;
  CHECK_THROWS_AS(boolean_lattice(4, limits), ResourceLimit);
}
