#pragma once

// Brute-force reference implementations. None of these call the decision
// procedures they are used to check.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "krullkit/entailment.hpp"
#include "krullkit/krull.hpp"
#include "krullkit/lattice.hpp"

namespace oracle {

using krullkit::Elem;
using krullkit::FiniteDistLattice;

/// All downsets of a DAG given by covers, by testing every subset of points.
inline std::vector<std::uint64_t> downsets(std::size_t points,
                                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << points); ++s) {
    bool closed = true;
    for (auto [lo, hi] : covers) {
      if (((s >> hi) & 1u) && !((s >> lo) & 1u)) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

/// Antichains of subsets of an n-set (the free distributive lattice with 0
/// and 1 on n generators), counted by testing every family of subsets.
inline std::size_t antichains_of_subsets(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::size_t count = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    bool antichain = true;
    for (std::size_t a = 0; a < subsets && antichain; ++a) {
      if (!((family >> a) & 1u)) continue;
      for (std::size_t b = 0; b < subsets; ++b) {
        if (a != b && ((family >> b) & 1u) && (a & b) == a) {
          antichain = false;
          break;
        }
      }
    }
    if (antichain) ++count;
  }
  return count;
}

/// A ⊢ B in the entailment relation generated by the axioms, decided
/// semantically: every 0/1 valuation satisfying the axioms satisfies A ⊢ B.
inline bool semantic_entails(const krullkit::EntailmentAxioms& ax, krullkit::Sequent q) {
  const std::size_t n = ax.generators.size();
  auto holds = [](std::uint64_t v, krullkit::Sequent s) { return (s.lhs & ~v) != 0 || (s.rhs & v) != 0; };
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    bool model = true;
    for (const auto& a : ax.axioms) {
      if (!holds(v, a)) {
        model = false;
        break;
      }
    }
    if (model && !holds(v, q)) return false;
  }
  return true;
}

/// Every map L → {0,1} preserving 0, 1, ∧ and ∨, as kernels over element
/// indices, found by trying all 2^|L| assignments.
inline std::vector<std::vector<bool>> spectrum(const FiniteDistLattice& L) {
  const std::size_t n = L.size();
  std::vector<std::vector<bool>> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    auto val = [&](Elem e) { return ((v >> L.index_of(e)) & 1u) != 0; };
    if (val(L.bottom()) || !val(L.top())) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        const Elem x = L.element(a), y = L.element(b);
        if (val(L.meet(x, y)) != (val(x) && val(y))) ok = false;
        if (val(L.join(x, y)) != (val(x) || val(y))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> kernel(n);
    for (std::size_t a = 0; a < n; ++a) kernel[a] = !((v >> a) & 1u);
    out.push_back(std::move(kernel));
  }
  return out;
}

inline bool kernel_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

/// Longest strictly increasing chain of prime kernels minus one.
inline int prime_chain_dimension(const FiniteDistLattice& L) {
  const auto primes = spectrum(L);
  if (primes.empty()) return -1;
  std::vector<int> longest(primes.size(), 1);
  // Larger kernels have more true entries; process by size.
  std::vector<std::size_t> order(primes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto weight = [&](std::size_t i) { return std::count(primes[i].begin(), primes[i].end(), true); };
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return weight(a) < weight(b); });
  int best = 1;
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      const auto a = order[y], b = order[x];
      if (primes[a] != primes[b] && kernel_subset(primes[a], primes[b])) longest[b] = std::max(longest[b], longest[a] + 1);
    }
    best = std::max(best, longest[order[x]]);
  }
  return best - 1;
}

/// Whether a Kr_l query has a witness, by trying every tuple in L^l.
inline std::optional<std::vector<Elem>> kr_witness(const FiniteDistLattice& L, const krullkit::KrQuery& q) {
  const std::size_t l = q.levels;
  auto big_meet = [&](const std::vector<Elem>& xs) {
    Elem m = L.top();
    for (Elem e : xs) m = L.meet(m, e);
    return m;
  };
  auto big_join = [&](const std::vector<Elem>& xs) {
    Elem m = L.bottom();
    for (Elem e : xs) m = L.join(m, e);
    return m;
  };
  auto check = [&](const std::vector<Elem>& xs) {
    for (std::size_t i = 0; i <= l; ++i) {
      Elem lhs = big_meet(q.u[i]);
      Elem rhs = big_join(q.j[i]);
      if (i < l) lhs = L.meet(lhs, xs[i]);
      if (i > 0) rhs = L.join(rhs, xs[i - 1]);
      if (!L.leq(lhs, rhs)) return false;
    }
    return true;
  };
  std::vector<std::size_t> idx(l, 0);
  while (true) {
    std::vector<Elem> xs;
    for (auto i : idx) xs.push_back(L.element(i));
    if (check(xs)) return xs;
    std::size_t pos = 0;
    while (pos < l && ++idx[pos] == L.size()) idx[pos++] = 0;
    if (pos == l) return std::nullopt;
  }
}

/// Whether primes P_0 ⊆ ... ⊆ P_l exist with J_i ⊆ P_i and U_i ∩ P_i = ∅.
inline bool compatible_prime_chain(const FiniteDistLattice& L, const krullkit::KrQuery& q) {
  const auto primes = spectrum(L);
  const std::size_t l = q.levels;
  auto fits = [&](const std::vector<bool>& p, std::size_t level) {
    for (Elem e : q.j[level]) {
      if (!p[L.index_of(e)]) return false;
    }
    for (Elem e : q.u[level]) {
      if (p[L.index_of(e)]) return false;
    }
    return true;
  };
  std::function<bool(std::size_t, const std::vector<bool>*)> extend = [&](std::size_t level,
                                                                          const std::vector<bool>* below) {
    if (level > l) return true;
    for (const auto& p : primes) {
      if (below && !kernel_subset(*below, p)) continue;
      if (fits(p, level) && extend(level + 1, &p)) return true;
    }
    return false;
  };
  return extend(0, nullptr);
}

/// Largest c with c ∧ a <= b, by scanning L.
inline Elem implies(const FiniteDistLattice& L, Elem a, Elem b) {
  Elem best = L.bottom();
  for (Elem c : L.elements()) {
    if (L.leq(L.meet(c, a), b)) best = L.join(best, c);
  }
  return best;
}

/// f^k ∈ ⟨g⟩ over ℤ for some k <= bound, with ⟨g⟩ = ⟨gcd⟩.
inline bool integer_power_search(const mpz_class& f, const std::vector<mpz_class>& gens, unsigned bound) {
  mpz_class g = 0;
  for (const auto& x : gens) g = gcd(g, x);
  mpz_class power = 1;
  for (unsigned k = 0; k <= bound; ++k) {
    if (g == 0 ? power == 0 : power % g == 0) return true;
    power *= f;
  }
  return false;
}

/// f^k ∈ ⟨g⟩ in ℤ/n for some k <= n, trying every combination of multipliers.
inline bool modular_power_search(long f, const std::vector<long>& gens, long n) {
  std::vector<bool> ideal(static_cast<std::size_t>(n), false);
  ideal[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (long x = 0; x < n; ++x) {
      if (!ideal[x]) continue;
      for (long g : gens) {
        for (long r = 0; r < n; ++r) {
          const long y = ((x + r * (((g % n) + n) % n)) % n + n) % n;
          if (!ideal[y]) {
            ideal[y] = true;
            grew = true;
          }
        }
      }
    }
  }
  long power = 1 % n;
  for (long k = 0; k <= n; ++k) {
    if (ideal[power]) return true;
    power = (power * (((f % n) + n) % n)) % n;
  }
  return false;
}

}  // namespace oracle
