#include <benchmark/benchmark.h>

#include "mlf/mlf.hpp"

namespace {

using mlf::Complex;

void BM_AutoSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlf::ml_auto(Complex(0.4, 0.3), 0.7, 1.0));
}
BENCHMARK(BM_AutoSeries);

void BM_AutoAsymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlf::ml_auto(-35.0, 0.7, 1.0, 1e-12));
}
BENCHMARK(BM_AutoAsymptotic);

void BM_AutoQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlf::ml_auto(Complex(-2.0, 1.5), 0.5, 1.0));
}
BENCHMARK(BM_AutoQuadrature);

// residue branch: Arg z inside the Stokes sector
void BM_AutoQuadratureResidue(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlf::ml_auto(Complex(2.0, 1.0), 0.5, 1.0));
}
BENCHMARK(BM_AutoQuadratureResidue);

void BM_AutoReduction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlf::ml_auto(-8.0, 1.5, 1.0));
}
BENCHMARK(BM_AutoReduction);

void BM_BuildRule(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? mlf::ContourKind::Parabolic : mlf::ContourKind::Hyperbolic;
  for (auto _ : state) benchmark::DoNotOptimize(mlf::build_rule(kind, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_BuildRule)->ArgsProduct({{0, 1}, {14, 100}});

void BM_BuildPade(benchmark::State& state) {
  const auto solver = static_cast<mlf::PadeSolver>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mlf::build_pade(0.2, 1.0, 9, 8, solver));
}
BENCHMARK(BM_BuildPade)->DenseRange(0, 2);

void BM_PartialFractions(benchmark::State& state) {
  const auto approx = mlf::build_pade(0.5, 1.0, 12, 11);
  for (auto _ : state) benchmark::DoNotOptimize(mlf::partial_fractions(approx));
}
BENCHMARK(BM_PartialFractions);

}  // namespace

BENCHMARK_MAIN();
