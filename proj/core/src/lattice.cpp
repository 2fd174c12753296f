#include "krullkit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <queue>

#include "krullkit/errors.hpp"

namespace krullkit {

namespace {

constexpr PointSet bit(std::size_t i) { return PointSet{1} << i; }

void require_poset_size(std::size_t size) {
  if (size > kMaxPosetPoints) {
    throw ResourceLimit("poset has " + std::to_string(size) + " points; at most " +
                        std::to_string(kMaxPosetPoints) + " are supported");
  }
}

}  // namespace

bool canonical_less(Elem a, Elem b) noexcept {
  const int pa = std::popcount(a.bits);
  const int pb = std::popcount(b.bits);
  return pa != pb ? pa < pb : a.bits < b.bits;
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_covers(std::size_t size,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> covers) {
  require_poset_size(size);
  std::vector<std::vector<std::uint32_t>> lower(size);
  std::vector<std::vector<std::uint32_t>> upper(size);
  std::vector<std::size_t> indegree(size, 0);
  for (const auto& [lo, hi] : covers) {
    if (lo >= size || hi >= size) {
      throw InvalidInput("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                         ") is out of range for a poset of size " + std::to_string(size));
    }
    if (lo == hi) {
      throw InvalidInput("cover relation has a self-loop at point " + std::to_string(lo));
    }
    lower[hi].push_back(lo);
    upper[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm, smallest index first for a deterministic extension.
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t p = 0; p < size; ++p) {
    if (indegree[p] == 0) ready.push(p);
  }
  Poset poset;
  poset.down_.assign(size, 0);
  poset.up_.assign(size, 0);
  while (!ready.empty()) {
    const std::uint32_t p = ready.top();
    ready.pop();
    poset.linear_.push_back(p);
    PointSet down = bit(p);
    for (std::uint32_t q : lower[p]) down |= poset.down_[q];
    poset.down_[p] = down;
    for (std::uint32_t q : upper[p]) {
      if (--indegree[q] == 0) ready.push(q);
    }
  }
  if (poset.linear_.size() != size) {
    throw InvalidInput("cover relation contains a cycle");
  }
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      if ((poset.down_[q] >> p) & 1u) poset.up_[p] |= bit(q);
    }
  }
  for (std::uint32_t hi = 0; hi < size; ++hi) {
    for (std::uint32_t lo = 0; lo < size; ++lo) {
      if (lo == hi || !poset.leq(lo, hi)) continue;
      const PointSet strictly_between =
          (poset.down_[hi] & ~bit(hi)) & (poset.up_[lo] & ~bit(lo));
      if (strictly_between == 0) poset.covers_.emplace_back(lo, hi);
    }
  }
  std::sort(poset.covers_.begin(), poset.covers_.end());
  return poset;
}

Poset Poset::chain(std::size_t size) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  for (std::uint32_t i = 0; i + 1 < size; ++i) covers.emplace_back(i, i + 1);
  return from_covers(size, covers);
}

Poset Poset::antichain(std::size_t size) { return from_covers(size, {}); }

Poset Poset::disjoint_union(const Poset& left, const Poset& right) {
  const auto shift = static_cast<std::uint32_t>(left.size());
  auto covers = left.covers();
  for (const auto& [lo, hi] : right.covers()) covers.emplace_back(lo + shift, hi + shift);
  return from_covers(left.size() + right.size(), covers);
}

PointSet Poset::all_points() const noexcept {
  return size() == kMaxPosetPoints ? ~PointSet{0} : bit(size()) - 1;
}

// ---------------------------------------------------------------------------
// FiniteDistLattice

FiniteDistLattice::FiniteDistLattice(Poset poset, std::vector<Elem> elements)
    : poset_(std::move(poset)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].bits, i);
}

FiniteDistLattice FiniteDistLattice::from_poset(Poset poset, const Limits& limits) {
  std::vector<Elem> downsets;
  const auto& order = poset.linear_extension();
  // Depth-first over the linear extension: a point may join the current
  // downset only when everything strictly below it is already present.
  auto visit = [&](auto&& self, std::size_t depth, PointSet current) -> void {
    if (depth == order.size()) {
      if (downsets.size() >= limits.max_lattice_elements) {
        throw ResourceLimit("lattice exceeds " + std::to_string(limits.max_lattice_elements) +
                            " elements");
      }
      downsets.push_back(Elem{current});
      return;
    }
    const std::uint32_t p = order[depth];
    self(self, depth + 1, current);
    const PointSet below = poset.down_closure(p) & ~bit(p);
    if ((below & ~current) == 0) self(self, depth + 1, current | bit(p));
  };
  visit(visit, 0, 0);
  std::sort(downsets.begin(), downsets.end(), canonical_less);
  return FiniteDistLattice(std::move(poset), std::move(downsets));
}

Elem FiniteDistLattice::meet_all(std::span<const Elem> xs) const noexcept {
  PointSet acc = top().bits;
  for (Elem x : xs) acc &= x.bits;
  return Elem{acc};
}

Elem FiniteDistLattice::join_all(std::span<const Elem> xs) const noexcept {
  PointSet acc = 0;
  for (Elem x : xs) acc |= x.bits;
  return Elem{acc};
}

Elem FiniteDistLattice::implies(Elem a, Elem b) const noexcept {
  // p belongs to a → b iff no point below p lies in a \ b.
  const PointSet bad = a.bits & ~b.bits;
  PointSet result = 0;
  for (std::size_t p = 0; p < poset_.size(); ++p) {
    if ((poset_.down_closure(p) & bad) == 0) result |= bit(p);
  }
  return Elem{result};
}

std::vector<Elem> FiniteDistLattice::join_irreducibles() const {
  std::vector<Elem> result;
  for (std::size_t p = 0; p < poset_.size(); ++p) result.push_back(principal(p));
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

std::size_t FiniteDistLattice::index_of(Elem a) const {
  const auto it = index_.find(a.bits);
  if (it == index_.end()) {
    throw InvalidInput("bitset " + name(a) + " is not an element of the lattice");
  }
  return it->second;
}

std::string FiniteDistLattice::name(Elem a) {
  char buffer[24];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), a.bits, 16);
  (void)ec;
  return "0x" + std::string(buffer, end);
}

Elem FiniteDistLattice::parse_name(std::string_view text) const {
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
  PointSet value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidInput("'" + std::string(text) + "' is not a hex element name");
  }
  const Elem e{value};
  if (!contains(e)) {
    throw InvalidInput("'" + std::string(text) + "' is not an element of the lattice");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Constructors

FiniteDistLattice lattice_from_poset(Poset poset, const Limits& limits) {
  return FiniteDistLattice::from_poset(std::move(poset), limits);
}

FiniteDistLattice chain_lattice(std::size_t k, const Limits& limits) {
  if (k == 0) throw InvalidInput("chain_lattice requires at least one element");
  return FiniteDistLattice::from_poset(Poset::chain(k - 1), limits);
}

FiniteDistLattice boolean_lattice(std::size_t n, const Limits& limits) {
  return FiniteDistLattice::from_poset(Poset::antichain(n), limits);
}

FiniteDistLattice product(const FiniteDistLattice& left, const FiniteDistLattice& right,
                          const Limits& limits) {
  return FiniteDistLattice::from_poset(Poset::disjoint_union(left.poset(), right.poset()), limits);
}

Elem product_pair(const FiniteDistLattice& left, Elem a, Elem b) {
  return Elem{a.bits | (b.bits << left.poset().size())};
}

ImportedLattice lattice_from_order(std::size_t count,
                                   const std::function<bool(std::size_t, std::size_t)>& leq,
                                   const Limits& limits) {
  if (count == 0) throw InvalidInput("a lattice has at least one element");
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw InvalidInput("order is not antisymmetric on items " + std::to_string(a) + " and " +
                           std::to_string(b));
      }
    }
  }
  auto strictly_below = [&](std::size_t a, std::size_t b) { return a != b && leq(a, b); };

  // Join-irreducibles are exactly the items with one lower cover.
  std::vector<std::size_t> irreducibles;
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t lower_covers = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!strictly_below(i, j)) continue;
      bool is_cover = true;
      for (std::size_t k = 0; k < count && is_cover; ++k) {
        if (strictly_below(i, k) && strictly_below(k, j)) is_cover = false;
      }
      if (is_cover) ++lower_covers;
    }
    if (lower_covers == 1) irreducibles.push_back(j);
  }
  require_poset_size(irreducibles.size());

  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  for (std::uint32_t a = 0; a < irreducibles.size(); ++a) {
    for (std::uint32_t b = 0; b < irreducibles.size(); ++b) {
      if (a != b && leq(irreducibles[a], irreducibles[b])) covers.emplace_back(a, b);
    }
  }
  auto lattice =
      FiniteDistLattice::from_poset(Poset::from_covers(irreducibles.size(), covers), limits);

  std::vector<Elem> image(count);
  for (std::size_t a = 0; a < count; ++a) {
    PointSet bits = 0;
    for (std::size_t k = 0; k < irreducibles.size(); ++k) {
      if (leq(irreducibles[k], a)) bits |= bit(k);
    }
    image[a] = Elem{bits};
  }
  if (lattice.size() != count) {
    throw InvalidInput("order is not a distributive lattice: it has " + std::to_string(count) +
                       " items but its join-irreducibles generate " +
                       std::to_string(lattice.size()) + " downsets");
  }
  for (std::size_t a = 0; a < count; ++a) {
    if (!lattice.contains(image[a])) throw InvalidInput("order is not a distributive lattice");
    for (std::size_t b = 0; b < count; ++b) {
      if (leq(a, b) != lattice.leq(image[a], image[b])) {
        throw InvalidInput("order is not a distributive lattice");
      }
    }
  }
  return ImportedLattice{std::move(lattice), std::move(image)};
}

ImportedLattice validate_raw_lattice(const std::vector<std::vector<std::size_t>>& meet,
                                     const std::vector<std::vector<std::size_t>>& join,
                                     const Limits& limits) {
  const std::size_t n = meet.size();
  if (n == 0) throw InvalidInput("a lattice has at least one element");
  if (n > limits.max_lattice_elements) {
    throw ResourceLimit("raw lattice exceeds " + std::to_string(limits.max_lattice_elements) +
                        " elements");
  }
  if (saturating_pow(n, 3) > limits.max_search) {
    throw ResourceLimit("exhaustive triple check on " + std::to_string(n) +
                        " elements exceeds the search cap");
  }
  if (join.size() != n) throw InvalidInput("meet and join tables differ in size");
  for (std::size_t a = 0; a < n; ++a) {
    if (meet[a].size() != n || join[a].size() != n) {
      throw InvalidInput("operation tables must be square");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (meet[a][b] >= n || join[a][b] >= n) {
        throw InvalidInput("operation table entry out of range at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
      }
    }
  }
  auto m = [&](std::size_t a, std::size_t b) { return meet[a][b]; };
  auto j = [&](std::size_t a, std::size_t b) { return join[a][b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (m(a, a) != a) throw LatticeAxiomError("meet idempotence", a, a, a);
    if (j(a, a) != a) throw LatticeAxiomError("join idempotence", a, a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (m(a, b) != m(b, a)) throw LatticeAxiomError("meet commutativity", a, b, b);
      if (j(a, b) != j(b, a)) throw LatticeAxiomError("join commutativity", a, b, b);
      if (m(a, j(a, b)) != a) throw LatticeAxiomError("absorption a∧(a∨b) = a", a, b, b);
      if (j(a, m(a, b)) != a) throw LatticeAxiomError("absorption a∨(a∧b) = a", a, b, b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m(a, m(b, c)) != m(m(a, b), c)) throw LatticeAxiomError("meet associativity", a, b, c);
        if (j(a, j(b, c)) != j(j(a, b), c)) throw LatticeAxiomError("join associativity", a, b, c);
      }
    }
  }
  // Bounds exist in any finite lattice, but a 0 and 1 must be present as
  // table entries rather than implied.
  std::size_t bottom = n, top = n;
  for (std::size_t z = 0; z < n; ++z) {
    bool is_bottom = true, is_top = true;
    for (std::size_t x = 0; x < n; ++x) {
      is_bottom = is_bottom && m(z, x) == z;
      is_top = is_top && j(z, x) == z;
    }
    if (is_bottom) bottom = z;
    if (is_top) top = z;
  }
  if (bottom == n) throw InvalidInput("lattice has no least element");
  if (top == n) throw InvalidInput("lattice has no greatest element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) {
          throw LatticeAxiomError("distributivity a∧(b∨c) = (a∧b)∨(a∧c)", a, b, c);
        }
        if (j(a, m(b, c)) != m(j(a, b), j(a, c))) {
          throw LatticeAxiomError("distributivity a∨(b∧c) = (a∨b)∧(a∨c)", a, b, c);
        }
      }
    }
  }
  return lattice_from_order(
      n, [&](std::size_t a, std::size_t b) { return m(a, b) == a; }, limits);
}

std::vector<PrimeIdealPoint> spec_enumerate(const FiniteDistLattice& lattice) {
  std::vector<PrimeIdealPoint> points;
  const auto elements = lattice.elements();
  for (std::uint32_t p = 0; p < lattice.poset().size(); ++p) {
    PrimeIdealPoint point;
    point.point = p;
    point.kernel.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      point.kernel[i] = ((elements[i].bits >> p) & 1u) == 0;
    }
    points.push_back(std::move(point));
  }
  auto kernel_size = [](const PrimeIdealPoint& x) {
    return std::count(x.kernel.begin(), x.kernel.end(), true);
  };
  std::stable_sort(points.begin(), points.end(), [&](const auto& x, const auto& y) {
    return kernel_size(x) > kernel_size(y);
  });
  return points;
}

}  // namespace krullkit
