#include <benchmark/benchmark.h>

#include "krullkit/certificates.hpp"
#include "krullkit/entailment.hpp"
#include "krullkit/groebner.hpp"
#include "krullkit/krull.hpp"

using namespace krullkit;

namespace {

void BM_LatticeDimensionChain(benchmark::State& state) {
  const auto L = chain_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_dimension(L));
}
BENCHMARK(BM_LatticeDimensionChain)->Arg(4)->Arg(8)->Arg(16);

void BM_LatticeDimensionProduct(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto L = product(chain_lattice(k), chain_lattice(k));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_dimension(L));
}
BENCHMARK(BM_LatticeDimensionProduct)->Arg(3)->Arg(5)->Arg(6);

void BM_KrEntailsBoolean(benchmark::State& state) {
  const auto L = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  auto q = KrQuery::empty(2);
  q.u[0] = {L.element(1)};
  q.j[2] = {L.element(2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kr_entails(L, q));
    benchmark::DoNotOptimize(kr_entails_heyting(L, q));
  }
}
BENCHMARK(BM_KrEntailsBoolean)->Arg(2)->Arg(3)->Arg(4);

void BM_SequentClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<Sequent> axioms;
  for (std::size_t i = 0; i + 1 < n; ++i) axioms.push_back({Subset{1} << i, Subset{1} << (i + 1)});
  const EntailmentAxioms ax{GeneratorSet(names), axioms};
  for (auto _ : state) benchmark::DoNotOptimize(SequentClosure(ax).entails({1, Subset{1} << (n - 1)}));
}
BENCHMARK(BM_SequentClosure)->Arg(3)->Arg(5)->Arg(6);

void BM_Buchberger(benchmark::State& state) {
  const Field field = state.range(0) == 0 ? Field::rationals() : Field::prime(5);
  const std::vector<Polynomial> gens{Polynomial::parse("x1^3 - x2*x3", field, 3), Polynomial::parse("x2^2 - x1*x3", field, 3),
                                     Polynomial::parse("x3^2 - x1^2*x2", field, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1);

void BM_AlgebraicDependence(benchmark::State& state) {
  const PolynomialRing ring(Field::prime(5), 1);
  const std::vector<Polynomial> xs{ring.parse("x1^2 + 1"), ring.parse("x1^3 - x1")};
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_dependence(ring, xs));
}
BENCHMARK(BM_AlgebraicDependence);

void BM_IntegerCertificate(benchmark::State& state) {
  const IntegerRing zz;
  const std::vector<mpz_class> xs{mpz_class(2 * 2 * 2 * 3 * 7), mpz_class(6)};
  for (auto _ : state) benchmark::DoNotOptimize(integer_cert(zz, xs));
}
BENCHMARK(BM_IntegerCertificate);

}  // namespace

BENCHMARK_MAIN();
