#include "krullkit/krull.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

#include "krullkit/errors.hpp"

namespace krullkit {

KrQuery KrQuery::empty(std::size_t levels) {
  KrQuery q;
  q.levels = levels;
  q.u.resize(levels + 1);
  q.j.resize(levels + 1);
  return q;
}

KrQuery KrQuery::from_chain(const IdealisticChain& chain) {
  if (chain.pairs.empty()) throw InvalidInput("an idealistic chain needs at least one pair");
  KrQuery q = empty(chain.pairs.size() - 1);
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    q.u[i] = chain.pairs[i].u;
    q.j[i] = chain.pairs[i].j;
  }
  return q;
}

void validate_query(const FiniteDistLattice& lattice, const KrQuery& q) {
  if (q.u.size() != q.levels + 1 || q.j.size() != q.levels + 1) {
    throw InvalidInput("query needs U and J lists for each of the " + std::to_string(q.levels + 1) +
                       " levels");
  }
  for (const auto* side : {&q.u, &q.j}) {
    for (const auto& level : *side) {
      for (Elem e : level) {
        if (!lattice.contains(e)) throw InvalidInput("element " + FiniteDistLattice::name(e) + " is not in the lattice");
      }
    }
  }
}

namespace {

struct LevelBounds {
  std::vector<Elem> u;  // ⋀U_i
  std::vector<Elem> j;  // ⋁J_i
};

LevelBounds level_bounds(const FiniteDistLattice& lattice, const KrQuery& q) {
  LevelBounds b;
  for (std::size_t i = 0; i <= q.levels; ++i) {
    b.u.push_back(lattice.meet_all(q.u[i]));
    b.j.push_back(lattice.join_all(q.j[i]));
  }
  return b;
}

// g[i-1] bounds x_i from above for every witness.
std::vector<Elem> greatest_chain(const FiniteDistLattice& lattice, const LevelBounds& b, std::size_t levels) {
  std::vector<Elem> g;
  Elem below = lattice.bottom();
  for (std::size_t i = 0; i < levels; ++i) {
    const Elem x = lattice.implies(b.u[i], lattice.join(b.j[i], below));
    g.push_back(x);
    below = x;
  }
  return g;
}

class WitnessSearch {
 public:
  WitnessSearch(const FiniteDistLattice& lattice, const KrQuery& q)
      : lattice_(lattice), levels_(q.levels), bounds_(level_bounds(lattice, q)),
        greatest_(greatest_chain(lattice, bounds_, q.levels)) {
    candidates_.resize(levels_);
    for (std::size_t i = 0; i < levels_; ++i) {
      for (Elem e : lattice.elements()) {
        if (lattice.leq(e, greatest_[i])) candidates_[i].push_back(e);
      }
    }
  }

  std::size_t top_candidates() const { return candidates_.back().size(); }

  // Tries x_l = candidates_[l-1][top]; fills xs on success.
  bool complete_from(std::size_t top, std::vector<Elem>& xs) const {
    const Elem x = candidates_[levels_ - 1][top];
    if (!lattice_.leq(bounds_.u[levels_], lattice_.join(bounds_.j[levels_], x))) return false;
    xs.assign(levels_, Elem{});
    xs[levels_ - 1] = x;
    return descend(levels_ - 1, xs);
  }

 private:
  // Chooses x_i (1-based i = level) given x_{i+1} = xs[level].
  bool descend(std::size_t level, std::vector<Elem>& xs) const {
    if (level == 0) return lattice_.leq(lattice_.meet(xs[0], bounds_.u[0]), bounds_.j[0]);
    const Elem upper = lattice_.meet(xs[level], bounds_.u[level]);
    for (Elem x : candidates_[level - 1]) {
      if (!lattice_.leq(upper, lattice_.join(bounds_.j[level], x))) continue;
      xs[level - 1] = x;
      if (descend(level - 1, xs)) return true;
    }
    return false;
  }

  const FiniteDistLattice& lattice_;
  std::size_t levels_;
  LevelBounds bounds_;
  std::vector<Elem> greatest_;
  std::vector<std::vector<Elem>> candidates_;
};

}  // namespace

bool verify_witness(const FiniteDistLattice& lattice, const KrQuery& q, const ChainWitness& w) {
  if (w.xs.size() != q.levels) return false;
  for (Elem x : w.xs) {
    if (!lattice.contains(x)) return false;
  }
  const LevelBounds b = level_bounds(lattice, q);
  if (q.levels == 0) return lattice.leq(b.u[0], b.j[0]);
  const std::size_t l = q.levels;
  if (!lattice.leq(lattice.meet(w.xs[0], b.u[0]), b.j[0])) return false;
  for (std::size_t i = 1; i < l; ++i) {
    if (!lattice.leq(lattice.meet(w.xs[i], b.u[i]), lattice.join(b.j[i], w.xs[i - 1]))) return false;
  }
  return lattice.leq(b.u[l], lattice.join(b.j[l], w.xs[l - 1]));
}

std::optional<ChainWitness> kr_entails(const FiniteDistLattice& lattice, const KrQuery& q,
                                       const Limits& limits, const KrSearchOptions& options) {
  validate_query(lattice, q);
  if (saturating_pow(lattice.size(), q.levels) > limits.max_search) {
    throw ResourceLimit("witness search space |L|^" + std::to_string(q.levels) + " exceeds " +
                        std::to_string(limits.max_search));
  }
  if (q.levels == 0) {
    const LevelBounds b = level_bounds(lattice, q);
    if (lattice.leq(b.u[0], b.j[0])) return ChainWitness{};
    return std::nullopt;
  }

  const WitnessSearch search(lattice, q);
  const std::size_t total = search.top_candidates();
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(total)));
  if (workers <= 1) {
    std::vector<Elem> xs;
    for (std::size_t top = 0; top < total; ++top) {
      if (search.complete_from(top, xs)) return ChainWitness{std::move(xs)};
    }
    return std::nullopt;
  }

  // Strided split of x_l; the least successful index wins.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::vector<std::vector<Elem>> found(workers);
  std::vector<std::size_t> found_at(workers, kNone);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::vector<Elem> xs;
      for (std::size_t top = w; top < total && top < best.load(); top += workers) {
        if (search.complete_from(top, xs)) {
          found[w] = xs;
          found_at[w] = top;
          std::size_t current = best.load();
          while (top < current && !best.compare_exchange_weak(current, top)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (unsigned w = 0; w < workers; ++w) {
    if (found_at[w] == best.load() && best.load() != kNone) return ChainWitness{found[w]};
  }
  return std::nullopt;
}

std::optional<ChainWitness> heyting_witness(const FiniteDistLattice& lattice, const KrQuery& q) {
  validate_query(lattice, q);
  const LevelBounds b = level_bounds(lattice, q);
  ChainWitness w{greatest_chain(lattice, b, q.levels)};
  if (!verify_witness(lattice, q, w)) return std::nullopt;
  return w;
}

bool kr_entails_heyting(const FiniteDistLattice& lattice, const KrQuery& q) {
  validate_query(lattice, q);
  const LevelBounds b = level_bounds(lattice, q);
  Elem h = lattice.implies(b.u[0], b.j[0]);
  for (std::size_t i = 1; i <= q.levels; ++i) h = lattice.implies(b.u[i], lattice.join(b.j[i], h));
  return h == lattice.top();
}

bool prime_collapses(const FiniteDistLattice& lattice, const IdealisticPrime& p) {
  return lattice.entails(p.u, p.j);
}

ElemSequent combine_collapse(const FiniteDistLattice& lattice, const ElemSequent& left,
                             const ElemSequent& right, Elem x) {
  if (std::find(left.lhs.begin(), left.lhs.end(), x) == left.lhs.end()) {
    throw InvalidInput("cut element " + FiniteDistLattice::name(x) + " is missing from the left premise's hypotheses");
  }
  if (std::find(right.rhs.begin(), right.rhs.end(), x) == right.rhs.end()) {
    throw InvalidInput("cut element " + FiniteDistLattice::name(x) + " is missing from the right premise's conclusions");
  }
  if (!lattice.entails(left.lhs, left.rhs)) throw InvalidInput("left premise does not hold");
  if (!lattice.entails(right.lhs, right.rhs)) throw InvalidInput("right premise does not hold");

  ElemSequent out;
  std::copy_if(left.lhs.begin(), left.lhs.end(), std::back_inserter(out.lhs), [x](Elem e) { return e != x; });
  out.lhs.insert(out.lhs.end(), right.lhs.begin(), right.lhs.end());
  out.rhs = left.rhs;
  std::copy_if(right.rhs.begin(), right.rhs.end(), std::back_inserter(out.rhs), [x](Elem e) { return e != x; });
  if (!lattice.entails(out.lhs, out.rhs)) throw VerificationFailure("cut conclusion does not hold");
  return out;
}

std::optional<ChainWitness> chain_collapses(const FiniteDistLattice& lattice, const IdealisticChain& chain,
                                            const Limits& limits) {
  return kr_entails(lattice, KrQuery::from_chain(chain), limits);
}

IdealisticChain elementary_chain(const std::vector<Elem>& xs) {
  IdealisticChain chain;
  chain.pairs.resize(xs.size() + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    chain.pairs[i].u = {xs[i]};
    chain.pairs[i + 1].j = {xs[i]};
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Dimension

bool verify_dim_witness(const FiniteDistLattice& lattice, const DimWitness& w) {
  if (w.xs.size() != w.as.size()) return false;
  const KrQuery q = KrQuery::from_chain(elementary_chain(w.xs));
  return verify_witness(lattice, q, ChainWitness{w.as});
}

namespace {

std::vector<Elem> greatest_as(const FiniteDistLattice& lattice, const std::vector<Elem>& xs) {
  std::vector<Elem> as;
  Elem state = lattice.bottom();
  for (Elem x : xs) {
    const Elem a = lattice.implies(x, state);
    as.push_back(a);
    state = lattice.join(x, a);
  }
  return as;
}

}  // namespace

DimCheck lattice_dim_leq(const FiniteDistLattice& lattice, int d, const DimOptions& options,
                         const Limits& limits) {
  if (d < -1) throw InvalidInput("dimension bound must be at least -1");
  const std::size_t l = static_cast<std::size_t>(d + 1);
  std::vector<Elem> gens = options.over_generators
                               ? lattice.join_irreducibles()
                               : std::vector<Elem>(lattice.elements().begin(), lattice.elements().end());

  // Level i maps x_i ∨ a_i to (previous state, x_i), for the counterexample.
  struct Step {
    PointSet parent;
    Elem x;
  };
  std::vector<std::unordered_map<PointSet, Step>> levels(l + 1);
  levels[0].emplace(lattice.bottom().bits, Step{0, Elem{}});
  for (std::size_t i = 1; i <= l; ++i) {
    for (const auto& [state, step] : levels[i - 1]) {
      (void)step;
      for (Elem x : gens) {
        const Elem next = lattice.join(x, lattice.implies(x, Elem{state}));
        levels[i].try_emplace(next.bits, Step{state, x});
      }
    }
  }

  DimCheck result;
  const PointSet top = lattice.top().bits;
  for (const auto& [state, step] : levels[l]) {
    (void)step;
    if (state == top) continue;
    std::vector<Elem> xs(l);
    PointSet cursor = state;
    for (std::size_t i = l; i >= 1; --i) {
      const Step& s = levels[i].at(cursor);
      xs[i - 1] = s.x;
      cursor = s.parent;
    }
    result.counterexample = std::move(xs);
    return result;
  }
  result.holds = true;

  if (options.record_witnesses) {
    if (saturating_pow(gens.size(), l) > limits.max_search) {
      throw ResourceLimit("witness table of " + std::to_string(gens.size()) + "^" + std::to_string(l) +
                          " sequences exceeds " + std::to_string(limits.max_search));
    }
    std::vector<std::size_t> odometer(l, 0);
    if (!gens.empty() || l == 0) {
      while (true) {
        DimWitness w;
        for (std::size_t k : odometer) w.xs.push_back(gens[k]);
        w.as = greatest_as(lattice, w.xs);
        if (!verify_dim_witness(lattice, w)) throw VerificationFailure("dimension witness failed to verify");
        result.witnesses.push_back(std::move(w));
        std::size_t pos = 0;
        while (pos < l && ++odometer[pos] == gens.size()) odometer[pos++] = 0;
        if (pos == l) break;
      }
    }
  }
  return result;
}

int lattice_dimension(const FiniteDistLattice& lattice, const Limits& limits) {
  const int bound = static_cast<int>(lattice.poset().size());
  for (int d = -1; d <= bound; ++d) {
    if (lattice_dim_leq(lattice, d, {}, limits).holds) return d;
  }
  throw VerificationFailure("no dimension bound found below the number of join-irreducibles");
}

int spectral_dimension(const FiniteDistLattice& lattice) {
  auto points = spec_enumerate(lattice);
  if (points.empty()) return -1;
  auto kernel_size = [](const PrimeIdealPoint& p) { return std::count(p.kernel.begin(), p.kernel.end(), true); };
  std::stable_sort(points.begin(), points.end(),
                   [&](const auto& a, const auto& b) { return kernel_size(a) < kernel_size(b); });
  auto strictly_inside = [](const PrimeIdealPoint& a, const PrimeIdealPoint& b) {
    bool proper = false;
    for (std::size_t i = 0; i < a.kernel.size(); ++i) {
      if (a.kernel[i] && !b.kernel[i]) return false;
      if (!a.kernel[i] && b.kernel[i]) proper = true;
    }
    return proper;
  };
  std::vector<int> longest(points.size(), 1);
  int best = 1;
  for (std::size_t b = 0; b < points.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (strictly_inside(points[a], points[b])) longest[b] = std::max(longest[b], longest[a] + 1);
    }
    best = std::max(best, longest[b]);
  }
  return best - 1;
}

}  // namespace krullkit
