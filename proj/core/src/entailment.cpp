#include "krullkit/entailment.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "krullkit/errors.hpp"

namespace krullkit {

namespace {

constexpr Subset bit(std::size_t i) { return Subset{1} << i; }

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

bool canonical_subset_less(Subset a, Subset b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxGenerators) {
    throw ResourceLimit("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InvalidInput("duplicate generator '" + n + "'");
  }
}

std::size_t GeneratorSet::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Subset GeneratorSet::subset(std::span<const std::string> names) const {
  Subset s = 0;
  for (const auto& n : names) s |= bit(index_of(n));
  return s;
}

Subset GeneratorSet::all() const noexcept {
  return size() == kMaxGenerators ? ~Subset{0} : bit(size()) - 1;
}

// ---------------------------------------------------------------------------
// FreeLatticeElem

FreeLatticeElem FreeLatticeElem::normalize(std::vector<Subset> conjuncts) {
  std::sort(conjuncts.begin(), conjuncts.end(), canonical_subset_less);
  conjuncts.erase(std::unique(conjuncts.begin(), conjuncts.end()), conjuncts.end());
  FreeLatticeElem result;
  // Sorted by popcount, so any subset of c was already kept.
  for (Subset c : conjuncts) {
    const bool absorbed = std::any_of(result.conjuncts_.begin(), result.conjuncts_.end(),
                                      [c](Subset d) { return subset_of(d, c); });
    if (!absorbed) result.conjuncts_.push_back(c);
  }
  return result;
}

FreeLatticeElem FreeLatticeElem::join_of(Subset b) {
  std::vector<Subset> singletons;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    if ((b >> i) & 1u) singletons.push_back(bit(i));
  }
  return normalize(std::move(singletons));
}

FreeLatticeElem FreeLatticeElem::join(const FreeLatticeElem& other) const {
  std::vector<Subset> all = conjuncts_;
  all.insert(all.end(), other.conjuncts_.begin(), other.conjuncts_.end());
  return normalize(std::move(all));
}

FreeLatticeElem FreeLatticeElem::meet(const FreeLatticeElem& other) const {
  std::vector<Subset> unions;
  unions.reserve(conjuncts_.size() * other.conjuncts_.size());
  for (Subset a : conjuncts_) {
    for (Subset b : other.conjuncts_) unions.push_back(a | b);
  }
  return normalize(std::move(unions));
}

// ---------------------------------------------------------------------------
// SequentClosure

SequentClosure::SequentClosure(const EntailmentAxioms& axioms, const Limits& limits)
    : n_(axioms.generators.size()) {
  if (n_ > limits.max_closure_generators) {
    throw ResourceLimit("closure saturation over " + std::to_string(n_) +
                        " generators exceeds the bound of " +
                        std::to_string(limits.max_closure_generators));
  }
  const Subset universe = bit(n_);
  table_.assign(std::size_t{1} << (2 * n_), false);
  for (const Sequent& ax : axioms.axioms) {
    if (!subset_of(ax.lhs | ax.rhs, universe - 1)) {
      throw InvalidInput("axiom mentions a generator outside the generator set");
    }
    table_[slot(ax.lhs, ax.rhs)] = true;
  }
  // Reflexivity together with monotonicity: A ⊢ B whenever A and B meet.
  for (Subset a = 0; a < universe; ++a) {
    for (Subset b = 0; b < universe; ++b) {
      if ((a & b) != 0) table_[slot(a, b)] = true;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Monotonicity: A \ {y} and B \ {y} come earlier in this iteration order,
    // so one sweep closes the table upward.
    for (Subset a = 0; a < universe; ++a) {
      for (Subset b = 0; b < universe; ++b) {
        if (table_[slot(a, b)]) continue;
        bool hit = false;
        for (std::size_t y = 0; y < n_ && !hit; ++y) {
          if ((a >> y) & 1u) hit = table_[slot(a & ~bit(y), b)];
          if (!hit && ((b >> y) & 1u)) hit = table_[slot(a, b & ~bit(y))];
        }
        if (hit) table_[slot(a, b)] = true;
      }
    }
    // Cut: from A, x ⊢ B and A ⊢ B, x infer A ⊢ B.
    for (Subset a = 0; a < universe; ++a) {
      for (Subset b = 0; b < universe; ++b) {
        if (table_[slot(a, b)]) continue;
        for (std::size_t x = 0; x < n_; ++x) {
          if (((a | b) >> x) & 1u) continue;
          if (table_[slot(a | bit(x), b)] && table_[slot(a, b | bit(x))]) {
            table_[slot(a, b)] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
}

bool SequentClosure::entails(Sequent q) const {
  if (!subset_of(q.lhs | q.rhs, bit(n_) - 1)) {
    throw InvalidInput("sequent mentions a generator outside the generator set");
  }
  return table_[slot(q.lhs, q.rhs)];
}

bool closure_decide(const EntailmentAxioms& axioms, Sequent q, const Limits& limits) {
  return SequentClosure(axioms, limits).entails(q);
}

// ---------------------------------------------------------------------------
// The ≺ relation and the presented lattice

namespace {

class PrecDecider {
 public:
  PrecDecider(const EntailmentAxioms& axioms, const FreeLatticeElem& y) : axioms_(axioms), y_(y) {}

  bool holds(Subset a) {
    if (const auto it = memo_.find(a); it != memo_.end()) return it->second;
    const bool result = compute(a);
    memo_.emplace(a, result);
    return result;
  }

 private:
  bool compute(Subset a) {
    for (Subset b : y_.conjuncts()) {
      if (subset_of(b, a)) return true;
    }
    for (const Sequent& ax : axioms_.axioms) {
      // An axiom whose right side meets A only restates A ≺ Y.
      if (!subset_of(ax.lhs, a) || (ax.rhs & a) != 0) continue;
      bool every_branch = true;
      for (std::size_t y = 0; y < kMaxGenerators && every_branch; ++y) {
        if ((ax.rhs >> y) & 1u) every_branch = holds(a | bit(y));
      }
      if (every_branch) return true;
    }
    return false;
  }

  const EntailmentAxioms& axioms_;
  const FreeLatticeElem& y_;
  std::unordered_map<Subset, bool> memo_;
};

}  // namespace

bool prec_decide(const EntailmentAxioms& axioms, Subset a, const FreeLatticeElem& y) {
  return PrecDecider(axioms, y).holds(a);
}

bool free_leq(const EntailmentAxioms& axioms, const FreeLatticeElem& x, const FreeLatticeElem& y) {
  PrecDecider decider(axioms, y);
  return std::all_of(x.conjuncts().begin(), x.conjuncts().end(),
                     [&](Subset a) { return decider.holds(a); });
}

bool free_equal(const EntailmentAxioms& axioms, const FreeLatticeElem& x, const FreeLatticeElem& y) {
  return free_leq(axioms, x, y) && free_leq(axioms, y, x);
}

PresentedLattice free_lattice_enumerate(const EntailmentAxioms& axioms, const Limits& limits) {
  const std::size_t n = axioms.generators.size();
  if (n > limits.max_enumeration_generators) {
    throw ResourceLimit("free lattice enumeration over " + std::to_string(n) +
                        " generators exceeds the bound of " +
                        std::to_string(limits.max_enumeration_generators));
  }
  std::vector<Subset> subsets;
  for (Subset s = 0; s < bit(n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), canonical_subset_less);

  // Every antichain of subsets is a normal form.
  std::vector<FreeLatticeElem> forms;
  std::vector<Subset> chosen;
  auto grow = [&](auto&& self, std::size_t next) -> void {
    if (next == subsets.size()) {
      forms.push_back(FreeLatticeElem::normalize(chosen));
      return;
    }
    self(self, next + 1);
    const Subset s = subsets[next];
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [s](Subset c) {
      return subset_of(c, s) || subset_of(s, c);
    });
    if (!comparable) {
      chosen.push_back(s);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);

  std::vector<FreeLatticeElem> classes;
  for (auto& form : forms) {
    const bool known = std::any_of(classes.begin(), classes.end(), [&](const FreeLatticeElem& c) {
      return free_equal(axioms, c, form);
    });
    if (!known) classes.push_back(std::move(form));
  }
  const std::size_t count = classes.size();
  std::vector<bool> order(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) order[a * count + b] = free_leq(axioms, classes[a], classes[b]);
  }
  auto imported = lattice_from_order(
      count, [&](std::size_t a, std::size_t b) { return order[a * count + b]; }, limits);

  PresentedLattice result{std::move(imported.lattice), {}, {}};
  result.representatives.resize(count);
  for (std::size_t c = 0; c < count; ++c) {
    result.representatives[result.lattice.index_of(imported.image[c])] = classes[c];
  }
  for (std::size_t g = 0; g < n; ++g) {
    const auto gen = FreeLatticeElem::generator(g);
    for (std::size_t c = 0; c < count; ++c) {
      if (free_equal(axioms, classes[c], gen)) {
        result.generator_image.push_back(imported.image[c]);
        break;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Quotients

bool quotient_leq(const EntailmentAxioms& axioms, std::span<const FreeLatticeElem> j,
                  std::span<const FreeLatticeElem> u, const FreeLatticeElem& a,
                  const FreeLatticeElem& b) {
  FreeLatticeElem lhs = a;
  for (const auto& x : u) lhs = lhs.meet(x);
  FreeLatticeElem rhs = b;
  for (const auto& x : j) rhs = rhs.join(x);
  return free_leq(axioms, lhs, rhs);
}

bool quotient_leq(const FiniteDistLattice& lattice, std::span<const Elem> j, std::span<const Elem> u,
                  Elem a, Elem b) {
  return lattice.leq(lattice.meet(a, lattice.meet_all(u)), lattice.join(b, lattice.join_all(j)));
}

ConjugatePair conjugate_pair(const FiniteDistLattice& lattice, std::span<const Elem> j,
                             std::span<const Elem> u) {
  ConjugatePair pair;
  const Elem zero = lattice.bottom();
  const Elem one = lattice.top();
  std::vector<bool> in_ideal(lattice.size()), in_filter(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Elem x = lattice.element(i);
    in_ideal[i] = quotient_leq(lattice, j, u, x, zero);
    in_filter[i] = quotient_leq(lattice, j, u, one, x);
    if (in_ideal[i]) pair.ideal.push_back(x);
    if (in_filter[i]) pair.filter.push_back(x);
  }
  for (std::size_t xi = 0; xi < lattice.size(); ++xi) {
    const Elem x = lattice.element(xi);
    for (Elem f : pair.filter) {
      if (in_ideal[lattice.index_of(lattice.meet(x, f))] && !in_ideal[xi]) {
        throw VerificationFailure("ideal and filter are not conjugate");
      }
    }
    for (Elem i : pair.ideal) {
      if (in_filter[lattice.index_of(lattice.join(x, i))] && !in_filter[xi]) {
        throw VerificationFailure("ideal and filter are not conjugate");
      }
    }
  }
  return pair;
}

// ---------------------------------------------------------------------------
// Boolean completion and lattice presentations

EntailmentAxioms boolean_completion(const EntailmentAxioms& axioms) {
  const std::size_t n = axioms.generators.size();
  if (2 * n > kMaxGenerators) {
    throw ResourceLimit("Boolean completion would need more than " +
                        std::to_string(kMaxGenerators) + " generators");
  }
  std::vector<std::string> names = axioms.generators.names();
  for (std::size_t i = 0; i < n; ++i) names.push_back("~" + axioms.generators.name(i));
  EntailmentAxioms completed{GeneratorSet(std::move(names)), axioms.axioms};
  for (std::size_t i = 0; i < n; ++i) {
    const Subset pair = bit(i) | bit(n + i);
    completed.axioms.push_back(Sequent{pair, 0});
    completed.axioms.push_back(Sequent{0, pair});
  }
  return completed;
}

EntailmentAxioms presentation_of(const FiniteDistLattice& lattice) {
  const Poset& poset = lattice.poset();
  const std::size_t n = poset.size();
  std::vector<std::string> names;
  for (std::size_t p = 0; p < n; ++p) names.push_back("p" + std::to_string(p));
  EntailmentAxioms axioms{GeneratorSet(std::move(names)), {}};

  auto maximal_points = [&](PointSet set) {
    Subset maximal = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (((set >> p) & 1u) && (poset.up_closure(p) & set) == bit(p)) maximal |= bit(p);
    }
    return maximal;
  };
  for (const auto& [lo, hi] : poset.covers()) axioms.axioms.push_back(Sequent{bit(lo), bit(hi)});
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (poset.leq(p, q) || poset.leq(q, p)) continue;
      const PointSet common = poset.down_closure(p) & poset.down_closure(q);
      axioms.axioms.push_back(Sequent{bit(p) | bit(q), maximal_points(common)});
    }
  }
  axioms.axioms.push_back(Sequent{0, maximal_points(poset.all_points())});
  return axioms;
}

FreeLatticeElem presented_element(const FiniteDistLattice& lattice, Elem a) {
  const Poset& poset = lattice.poset();
  std::vector<Subset> conjuncts;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (((a.bits >> p) & 1u) && (poset.up_closure(p) & a.bits) == bit(p)) conjuncts.push_back(bit(p));
  }
  return FreeLatticeElem::normalize(std::move(conjuncts));
}

}  // namespace krullkit
