#include <benchmark/benchmark.h>

#include "betalog/specfun.hpp"

namespace sf = betalog::specfun;

static void BM_LogGamma(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::log_gamma(z));
  }
}
BENCHMARK(BM_LogGamma)->Arg(5)->Arg(25)->Arg(150)->Arg(10000);

static void BM_Polygamma(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double z = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::polygamma(m, z));
    z = (z < 40.0) ? z + 0.31 : 0.7;  // sweep the recurrence depth
  }
}
BENCHMARK(BM_Polygamma)->DenseRange(0, 3);

static void BM_HurwitzZeta(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::hurwitz_zeta(3.0, a));
  }
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(10)->Arg(1000);

BENCHMARK_MAIN();
