#include <benchmark/benchmark.h>

#include "bergq/centralizer.hpp"
#include "bergq/diagonalization.hpp"
#include "bergq/random.hpp"

using namespace bergq;

namespace {

const Field Q = Field::rationals();

std::vector<Variable> four_vars() {
  return {Variable::aux("x", 1), Variable::aux("x", 2), Variable::aux("y", 1), Variable::aux("y", 2)};
}

void BM_FreeProduct(benchmark::State& state) {
  RandomSource rng(1);
  const auto a = rng.free_poly(Q, 3, static_cast<unsigned>(state.range(0)), 12);
  const auto b = rng.free_poly(Q, 3, static_cast<unsigned>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FreeProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_StandardIdentity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(amitsur_levitzki_check(n, Q));
}
BENCHMARK(BM_StandardIdentity)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto x = make_generic(1, static_cast<std::size_t>(state.range(0)), Q)[0];
  for (auto _ : state) benchmark::DoNotOptimize(trace_and_charpoly(x));
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CentralizerBasis(benchmark::State& state) {
  const auto f = FreePoly::parse("x2*x1*x2", 2, Q);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_basis(f, d));
}
BENCHMARK(BM_CentralizerBasis)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Annihilator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = pi_reduce(FreePoly::parse("x1", 2, Q), n);
  const auto g = pi_reduce(FreePoly::parse("x1^3 + x1", 2, Q), n);
  for (auto _ : state) benchmark::DoNotOptimize(find_annihilator(f, g, 4));
}
BENCHMARK(BM_Annihilator)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_StarProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto vars = four_vars();
  const StarContext ctx(PoissonTensor::pairing(Q, vars), order);
  RandomSource rng(2);
  const auto a = FormalSeries::lift(rng.comm_poly(Q, vars, 4, 6), order);
  const auto b = FormalSeries::lift(rng.comm_poly(Q, vars, 4, 6), order);
  for (auto _ : state) benchmark::DoNotOptimize(star_mul(a, b, ctx));
}
BENCHMARK(BM_StarProduct)->DenseRange(1, 4, 1);

void BM_SymbolicDiagonalization(benchmark::State& state) {
  using RF = RationalFunction;
  const auto n = static_cast<std::size_t>(state.range(0));
  const RF zero{CommPoly(Q)};
  std::vector<RF> lambda;
  for (std::uint32_t i = 1; i <= n; ++i) lambda.emplace_back(CommPoly(Q, Variable::aux("l", i)));
  Matrix<RF> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = RF(CommPoly::constant(Q, static_cast<long>(i + 2 * j + 1)));
  const FieldSeriesMatrix<RF> a({Matrix<RF>::diagonal(lambda, zero), m, Matrix<RF>(n, n, zero)});
  for (auto _ : state) benchmark::DoNotOptimize(successive_diagonalize(a, 2));
}
BENCHMARK(BM_SymbolicDiagonalization)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
