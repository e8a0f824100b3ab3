#include <benchmark/benchmark.h>

#include "lmarkov/bessel_asymptotics.hpp"
#include "lmarkov/matrix_builder.hpp"
#include "lmarkov/oracle_quadrature.hpp"
#include "lmarkov/spectral.hpp"

using namespace lmarkov;

static void BM_BuildA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_a(n, AlphaParam(2.0)));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildA)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_MuMaxPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = build_a(n, AlphaParam(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_max_power(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MuMaxPower)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_FullSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = build_a(n, AlphaParam(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_FullSpectrum)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_GaussLaguerre(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(m, AlphaParam(1.0)));
}
BENCHMARK(BM_GaussLaguerre)->Arg(10)->Arg(50)->Arg(150);

static void BM_FirstPositiveZero(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(first_positive_zero(nu));
}
BENCHMARK(BM_FirstPositiveZero)->Arg(0)->Arg(3)->Arg(40);
BENCHMARK_MAIN();
