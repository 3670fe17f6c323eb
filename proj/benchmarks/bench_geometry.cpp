#include <benchmark/benchmark.h>

#include "betalog/geometry.hpp"

using namespace betalog;

static void BM_Fisher(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fisher(p));
  }
}
BENCHMARK(BM_Fisher);

static void BM_Connection(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(connection(p, 0.0));
  }
}
BENCHMARK(BM_Connection);

static void BM_CurvatureClosedForm(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature(p, 0.5));
  }
}
BENCHMARK(BM_CurvatureClosedForm);

static void BM_CurvatureContraction(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_via_t_tensor(p, 0.5));
  }
}
BENCHMARK(BM_CurvatureContraction);

BENCHMARK_MAIN();
