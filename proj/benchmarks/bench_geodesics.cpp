#include <benchmark/benchmark.h>

#include <cmath>

#include "betalog/geodesics.hpp"

using namespace betalog;

static void BM_Rhs(benchmark::State& state) {
  GeodesicState s;
  s.theta = {1.0, 0.0};
  s.velocity = unit_speed_velocity({1.0, 0.0}, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_rhs(s));
  }
}
BENCHMARK(BM_Rhs);

static void BM_Integrate(benchmark::State& state) {
  GeodesicState start;
  start.theta = {1.0, 0.0};
  start.velocity = unit_speed_velocity({1.0, 0.0}, 0.5);
  const double rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_geodesic(start, 5.0, rel_tol, rel_tol * 1e-3));
  }
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(9)->Arg(11);

static void BM_Bundle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_bundle({1.0, 0.0}, 8, 2.0));
  }
}
BENCHMARK(BM_Bundle);

BENCHMARK_MAIN();
