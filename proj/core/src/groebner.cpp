#include "krullkit/groebner.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "krullkit/errors.hpp"

namespace krullkit {

namespace {

constexpr std::size_t kMaxVars = 32;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  friend bool operator==(const Mono&, const Mono&) = default;
};

bool divides(const Mono& a, const Mono& b, std::size_t n) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Mono quotient(const Mono& a, const Mono& b, std::size_t n) {
  Mono q;
  for (std::size_t i = 0; i < n; ++i) q.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  q.deg = a.deg - b.deg;
  return q;
}

Mono lcm(const Mono& a, const Mono& b, std::size_t n) {
  Mono l;
  for (std::size_t i = 0; i < n; ++i) {
    l.e[i] = std::max(a.e[i], b.e[i]);
    l.deg += l.e[i];
  }
  return l;
}

bool coprime(const Mono& a, const Mono& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

Mono product(const Mono& a, const Mono& b, std::size_t n) {
  Mono p;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 255) throw ResourceLimit("exponent overflow during reduction");
    p.e[i] = static_cast<std::uint8_t>(s);
  }
  p.deg = a.deg + b.deg;
  return p;
}

class OrderCmp {
 public:
  OrderCmp(const MonomialOrder& order, std::size_t n) : order_(order), n_(n) {}

  // Three-way: negative, zero, positive.
  int operator()(const Mono& a, const Mono& b) const {
    switch (order_.kind) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < n_; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::grevlex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return revlex(a, b, 0, n_);
      case OrderKind::block: {
        const std::size_t k = std::min(order_.block_size, n_);
        if (int c = grevlex(a, b, 0, k); c != 0) return c;
        return grevlex(a, b, k, n_);
      }
    }
    return 0;
  }

 private:
  static int revlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i > lo; --i) {
      if (a.e[i - 1] != b.e[i - 1]) return a.e[i - 1] > b.e[i - 1] ? -1 : 1;
    }
    return 0;
  }
  static int grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    return revlex(a, b, lo, hi);
  }

  MonomialOrder order_;
  std::size_t n_;
};

// Coefficient arithmetic for GF(p), p < 2^31.
struct ModP {
  using C = std::uint32_t;
  std::uint32_t p;

  C add(C a, C b) const { const C s = a + b; return s >= p ? s - p : s; }
  C sub(C a, C b) const { return a >= b ? a - b : a + p - b; }
  C mul(C a, C b) const { return static_cast<C>(std::uint64_t{a} * b % p); }
  C neg(C a) const { return a == 0 ? 0 : p - a; }
  C inv(C a) const {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<C>(t < 0 ? t + p : t);
  }
  bool is_zero(C a) const { return a == 0; }
  C one() const { return 1; }
  C from(const Scalar& s) const { return static_cast<C>(s.get_num().get_ui()); }
  Scalar to(C c) const { return Scalar(static_cast<unsigned long>(c)); }
};

struct RatQ {
  using C = mpq_class;

  C add(const C& a, const C& b) const { return a + b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C mul(const C& a, const C& b) const { return a * b; }
  C neg(const C& a) const { return -a; }
  C inv(const C& a) const { return C(1) / a; }
  bool is_zero(const C& a) const { return sgn(a) == 0; }
  C one() const { return C(1); }
  C from(const Scalar& s) const { return s; }
  Scalar to(const C& c) const { return c; }
};

template <class Ops>
class Engine {
 public:
  using C = typename Ops::C;
  struct T {
    Mono m;
    C c;
  };
  using P = std::vector<T>;

  struct Elem {
    P poly;
    // poly = Σ rep[i]·gens[i] (basis elements) when tracking.
    std::vector<P> rep;
    // Degree the element would have if the input were homogenized.
    std::uint32_t sugar = 0;
  };

  Engine(Ops ops, const MonomialOrder& order, Field field, std::size_t n, const Limits& limits)
      : ops_(ops), cmp_(order, n), field_(field), n_(n), limits_(limits) {
    if (n > kMaxVars) throw ResourceLimit("at most " + std::to_string(kMaxVars) + " variables are supported");
  }

  P import(const Polynomial& f) const {
    P p;
    for (const auto& t : f.terms()) {
      Mono m;
      for (std::size_t i = 0; i < n_; ++i) {
        if (t.exponents[i] > 255) throw ResourceLimit("exponent too large");
        m.e[i] = static_cast<std::uint8_t>(t.exponents[i]);
        m.deg += t.exponents[i];
      }
      p.push_back(T{m, ops_.from(field_.normalize(t.coeff))});
    }
    std::sort(p.begin(), p.end(), [this](const T& a, const T& b) { return cmp_(a.m, b.m) > 0; });
    return p;
  }

  Polynomial export_poly(const P& p) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back(Term{Monomial(t.m.e.begin(), t.m.e.begin() + n_), ops_.to(t.c)});
    return Polynomial::from_terms(field_, n_, std::move(terms));
  }

  // Reduced Gröbner basis of the generators; with tracking, every element
  // carries its representation over `gens`.
  std::vector<Elem> groebner(std::span<const Polynomial> gens, bool track) {
    track_ = track;
    gen_count_ = gens.size();
    basis_.clear();
    pending_.clear();
    pairs_.clear();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem e{import(gens[i]), {}};
      if (e.poly.empty()) continue;
      check_degree(e.poly);
      if (track_) {
        e.rep.assign(gen_count_, P{});
        e.rep[i].push_back(T{Mono{}, ops_.one()});
      }
      for (const auto& t : e.poly) e.sugar = std::max(e.sugar, t.m.deg);
      make_monic(e);
      if (is_constant(e.poly)) return {std::move(e)};
      add(std::move(e));
    }

    while (!pairs_.empty()) {
      const auto chosen = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (int c = cmp_(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair pair = *chosen;
      pairs_.erase(chosen);
      pending_.erase(key(pair.i, pair.j));

      const Mono& li = basis_[pair.i].poly.front().m;
      const Mono& lj = basis_[pair.j].poly.front().m;
      if (coprime(li, lj, n_)) continue;
      if (chain_criterion(pair)) continue;

      Elem s = spoly(pair);
      reduce(s, basis_, true);
      if (s.poly.empty()) continue;
      check_degree(s.poly);
      make_monic(s);
      if (is_constant(s.poly)) return {std::move(s)};
      add(std::move(s));
    }
    return interreduce();
  }

  // Reduces f by a basis; returns the remainder and, with tracking, the
  // cofactors c with f - remainder = Σ c[i]·gens[i].
  std::pair<P, std::vector<P>> reduce_with_cofactors(const Polynomial& f, const std::vector<Elem>& basis) {
    Elem h{import(f), {}};
    if (track_) h.rep.assign(gen_count_, P{});
    reduce(h, basis, true);
    std::vector<P> cof;
    for (auto& r : h.rep) cof.push_back(negate(r));
    return {std::move(h.poly), std::move(cof)};
  }

 private:
  struct Pair {
    std::size_t i, j;
    Mono lcm;
    std::uint32_t sugar;
  };

  static std::uint64_t key(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return (std::uint64_t{i} << 32) | j;
  }

  static bool is_constant(const P& p) { return p.size() == 1 && p.front().m.deg == 0; }

  void check_degree(const P& p) const {
    for (const auto& t : p) {
      if (t.m.deg > limits_.max_degree) {
        throw ResourceLimit("polynomial degree exceeds the cap of " + std::to_string(limits_.max_degree));
      }
    }
  }

  void add(Elem e) {
    const std::size_t k = basis_.size();
    if (k + 1 > limits_.max_basis_size) {
      throw ResourceLimit("Gröbner basis exceeds the cap of " + std::to_string(limits_.max_basis_size) + " elements");
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Mono l = lcm(basis_[i].poly.front().m, e.poly.front().m, n_);
      const std::uint32_t sugar = std::max(basis_[i].sugar + l.deg - basis_[i].poly.front().m.deg,
                                           e.sugar + l.deg - e.poly.front().m.deg);
      pairs_.push_back(Pair{i, k, l, sugar});
      pending_.insert(key(i, k));
    }
    basis_.push_back(std::move(e));
  }

  bool chain_criterion(const Pair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!divides(basis_[k].poly.front().m, pair.lcm, n_)) continue;
      if (!pending_.contains(key(pair.i, k)) && !pending_.contains(key(pair.j, k))) return true;
    }
    return false;
  }

  P negate(const P& p) const {
    P r = p;
    for (auto& t : r) t.c = ops_.neg(t.c);
    return r;
  }

  // p - c·m·g
  P sub_mul(const P& p, const C& c, const Mono& m, const P& g) const {
    P r;
    r.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    const C minus_c = ops_.neg(c);
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        r.push_back(p[i++]);
        continue;
      }
      const Mono gm = product(g[j].m, m, n_);
      const int order = i == p.size() ? -1 : cmp_(p[i].m, gm);
      if (order > 0) {
        r.push_back(p[i++]);
      } else if (order < 0) {
        r.push_back(T{gm, ops_.mul(minus_c, g[j].c)});
        ++j;
      } else {
        C sum = ops_.add(p[i].c, ops_.mul(minus_c, g[j].c));
        if (!ops_.is_zero(sum)) r.push_back(T{gm, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  P add_mul(const P& p, const C& c, const Mono& m, const P& g) const { return sub_mul(p, ops_.neg(c), m, g); }

  void make_monic(Elem& e) const {
    const C inv = ops_.inv(e.poly.front().c);
    for (auto& t : e.poly) t.c = ops_.mul(t.c, inv);
    for (auto& r : e.rep) {
      for (auto& t : r) t.c = ops_.mul(t.c, inv);
    }
  }

  Elem spoly(const Pair& pair) const {
    const Elem& a = basis_[pair.i];
    const Elem& b = basis_[pair.j];
    const Mono ma = quotient(pair.lcm, a.poly.front().m, n_);
    const Mono mb = quotient(pair.lcm, b.poly.front().m, n_);
    Elem s;
    s.sugar = pair.sugar;
    s.poly = sub_mul(add_mul(P{}, ops_.one(), ma, a.poly), ops_.one(), mb, b.poly);
    if (track_) {
      for (std::size_t k = 0; k < gen_count_; ++k) {
        s.rep.push_back(sub_mul(add_mul(P{}, ops_.one(), ma, a.rep[k]), ops_.one(), mb, b.rep[k]));
      }
    }
    return s;
  }

  // Divides h by monic basis elements, keeping the representation in step.
  void reduce(Elem& h, const std::vector<Elem>& basis, bool full, std::size_t skip = SIZE_MAX) const {
    P rem;
    P work = std::move(h.poly);
    std::size_t start = 0;
    while (start < work.size()) {
      const T& lt = work[start];
      const Elem* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k != skip && divides(basis[k].poly.front().m, lt.m, n_)) {
          divisor = &basis[k];
          break;
        }
      }
      if (divisor == nullptr) {
        if (!full) break;
        rem.push_back(lt);
        ++start;
        continue;
      }
      const C q = lt.c;
      const Mono m = quotient(lt.m, divisor->poly.front().m, n_);
      h.sugar = std::max(h.sugar, divisor->sugar + m.deg);
      P tail(work.begin() + static_cast<std::ptrdiff_t>(start), work.end());
      work = sub_mul(tail, q, m, divisor->poly);
      start = 0;
      if (track_) {
        for (std::size_t k = 0; k < gen_count_; ++k) h.rep[k] = sub_mul(h.rep[k], q, m, divisor->rep[k]);
      }
    }
    rem.insert(rem.end(), work.begin() + static_cast<std::ptrdiff_t>(start), work.end());
    h.poly = std::move(rem);
  }

  std::vector<Elem> interreduce() {
    std::vector<Elem> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Mono& li = basis_[i].poly.front().m;
      bool redundant = false;
      for (std::size_t k = 0; k < basis_.size() && !redundant; ++k) {
        if (k == i) continue;
        const Mono& lk = basis_[k].poly.front().m;
        if (divides(lk, li, n_) && (lk != li || k < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Elem& e = minimal[i];
      // head + tail keeps matching e.rep while the tail is reduced.
      Elem tail{P(e.poly.begin() + 1, e.poly.end()), e.rep};
      const T head = e.poly.front();
      reduce(tail, minimal, true, i);
      P poly{head};
      poly.insert(poly.end(), tail.poly.begin(), tail.poly.end());
      e.poly = std::move(poly);
      e.rep = std::move(tail.rep);
    }
    std::sort(minimal.begin(), minimal.end(),
              [this](const Elem& a, const Elem& b) { return cmp_(a.poly.front().m, b.poly.front().m) < 0; });
    return minimal;
  }

  Ops ops_;
  OrderCmp cmp_;
  Field field_;
  std::size_t n_;
  const Limits& limits_;
  bool track_ = false;
  std::size_t gen_count_ = 0;
  std::vector<Elem> basis_;
  std::vector<Pair> pairs_;
  std::unordered_set<std::uint64_t> pending_;
};

template <class Fn>
auto with_engine(const Field& field, std::size_t n, const MonomialOrder& order, const Limits& limits, Fn&& fn) {
  if (field.is_rationals()) {
    Engine<RatQ> engine(RatQ{}, order, field, n, limits);
    return fn(engine);
  }
  Engine<ModP> engine(ModP{field.characteristic()}, order, field, n, limits);
  return fn(engine);
}

void check_same_ring(std::span<const Polynomial> gens, const Field& field, std::size_t n) {
  for (const auto& g : gens) {
    if (!(g.field() == field) || g.nvars() != n) throw InvalidInput("generators from different rings");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  check_same_ring(basis, f.field(), f.nvars());
  DivisionResult result{std::vector<Polynomial>(basis.size(), Polynomial(f.field(), f.nvars())),
                        Polynomial(f.field(), f.nvars())};
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size() && !divided; ++i) {
      if (basis[i].is_zero()) continue;
      const Term& lg = basis[i].leading_term(order);
      if (!monomial_divides(lg.exponents, lt.exponents)) continue;
      Monomial m(f.nvars());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = lt.exponents[k] - lg.exponents[k];
      const Polynomial q =
          Polynomial::monomial(f.field(), f.nvars(), std::move(m), f.field().mul(lt.coeff, f.field().inverse(lg.coeff)));
      result.quotients[i] = result.quotients[i] + q;
      p = p - q * basis[i];
      divided = true;
    }
    if (!divided) {
      const Polynomial head = Polynomial::monomial(f.field(), f.nvars(), lt.exponents, lt.coeff);
      result.remainder = result.remainder + head;
      p = p - head;
    }
  }
  return result;
}

bool IdealBasis::is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }

bool IdealBasis::contains(const Polynomial& f) const {
  if (basis.empty()) return f.is_zero();
  return normal_form(f, basis, order).remainder.is_zero();
}

IdealBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const Limits& limits) {
  IdealBasis result{std::vector<Polynomial>(gens.begin(), gens.end()), {}, order};
  if (gens.empty()) return result;
  const Field field = gens[0].field();
  const std::size_t n = gens[0].nvars();
  check_same_ring(gens, field, n);
  with_engine(field, n, order, limits, [&](auto& engine) {
    for (const auto& e : engine.groebner(gens, false)) result.basis.push_back(engine.export_poly(e.poly));
    return 0;
  });
  return result;
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      const Term& a = basis[i].leading_term(order);
      const Term& b = basis[j].leading_term(order);
      Monomial l(a.exponents.size());
      for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(a.exponents[k], b.exponents[k]);
      auto cofactor = [&](const Term& t) {
        Monomial m(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) m[k] = l[k] - t.exponents[k];
        return Polynomial::monomial(basis[i].field(), basis[i].nvars(), std::move(m),
                                    basis[i].field().inverse(t.coeff));
      };
      const Polynomial s = cofactor(a) * basis[i] - cofactor(b) * basis[j];
      if (!normal_form(s, basis, order).remainder.is_zero()) return false;
    }
  }
  return true;
}

MembershipResult ideal_membership(const Polynomial& f, std::span<const Polynomial> gens, const Limits& limits) {
  const Field field = f.field();
  const std::size_t n = f.nvars();
  check_same_ring(gens, field, n);
  MembershipResult result;
  if (f.is_zero()) {
    result.member = true;
    result.cofactors.assign(gens.size(), Polynomial(field, n));
    return result;
  }
  if (gens.empty()) return result;
  with_engine(field, n, MonomialOrder::grevlex(), limits, [&](auto& engine) {
    const auto basis = engine.groebner(gens, true);
    auto [rem, cof] = engine.reduce_with_cofactors(f, basis);
    result.member = rem.empty();
    if (result.member) {
      // Cofactors of f over gens: f = Σ cof_k·(Σ rep_k[i]·gens[i]) collapsed.
      for (const auto& c : cof) result.cofactors.push_back(engine.export_poly(c));
    }
    return 0;
  });
  if (result.member) {
    Polynomial sum(field, n);
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + result.cofactors[i] * gens[i];
    if (!(sum == f)) throw VerificationFailure("ideal membership cofactors failed to verify");
  }
  return result;
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> gens, const Limits& limits) {
  const Field field = f.field();
  const std::size_t n = f.nvars();
  check_same_ring(gens, field, n);
  if (f.is_zero()) return true;
  std::vector<std::size_t> target(n);
  std::iota(target.begin(), target.end(), 0);
  std::vector<Polynomial> extended;
  for (const auto& g : gens) extended.push_back(g.rename(n + 1, target));
  const Polynomial t = Polynomial::variable(field, n + 1, n);
  extended.push_back(Polynomial::constant(field, n + 1, 1) - t * f.rename(n + 1, target));
  return buchberger(extended, MonomialOrder::grevlex(), limits).is_unit();
}

IdealBasis saturation(std::span<const Polynomial> gens, const Polynomial& f, const Limits& limits) {
  const Field field = f.field();
  const std::size_t n = f.nvars();
  check_same_ring(gens, field, n);
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  std::vector<Polynomial> extended;
  for (const auto& g : gens) extended.push_back(g.rename(n + 1, shift));
  const Polynomial t = Polynomial::variable(field, n + 1, 0);
  extended.push_back(Polynomial::constant(field, n + 1, 1) - t * f.rename(n + 1, shift));
  const IdealBasis big = buchberger(extended, MonomialOrder::elimination(1), limits);

  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  IdealBasis result{std::vector<Polynomial>(gens.begin(), gens.end()), {}, MonomialOrder::grevlex()};
  for (const auto& g : big.basis) {
    if (g.degree_in(0) == 0) result.basis.push_back(g.rename(n, back));
  }
  return result;
}

IdealBasis eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> variables, const Limits& limits) {
  IdealBasis result{std::vector<Polynomial>(gens.begin(), gens.end()), {}, MonomialOrder::grevlex()};
  if (gens.empty()) return result;
  const Field field = gens[0].field();
  const std::size_t n = gens[0].nvars();
  check_same_ring(gens, field, n);
  std::vector<bool> drop(n, false);
  for (std::size_t v : variables) {
    if (v >= n) throw InvalidInput("elimination variable out of range");
    drop[v] = true;
  }
  // Eliminated variables move to the front, the rest keep their relative order.
  std::vector<std::size_t> to_front(n), back(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (drop[v]) to_front[v] = next++;
  }
  const std::size_t k = next;
  for (std::size_t v = 0; v < n; ++v) {
    if (!drop[v]) to_front[v] = next++;
  }
  for (std::size_t v = 0; v < n; ++v) back[to_front[v]] = v;

  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(g.rename(n, to_front));
  const IdealBasis big = buchberger(moved, MonomialOrder::elimination(k), limits);
  for (const auto& g : big.basis) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = g.degree_in(v) == 0;
    if (free) result.basis.push_back(g.rename(n, back));
  }
  return result;
}

}  // namespace krullkit
