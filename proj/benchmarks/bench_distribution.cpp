#include <benchmark/benchmark.h>

#include "betalog/distribution.hpp"

using namespace betalog;

static void BM_LogPdf(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_pdf(p, x));
    x = (x < 5.0) ? x + 0.37 : -5.0;
  }
}
BENCHMARK(BM_LogPdf);

static void BM_Sample(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(p, n, seed++));
  }
  state.SetItemsProcessed(static_cast<long>(n) * state.iterations());
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000);

static void BM_Normalization(benchmark::State& state) {
  const ThetaPoint p{3.0, 1.0};
  QuadratureSpec spec;
  spec.scheme = (state.range(0) == 0) ? QuadScheme::tanh_sinh
                                      : QuadScheme::gauss_kronrod;
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment(p, 0, spec));
  }
}
BENCHMARK(BM_Normalization)->Arg(0)->Arg(1);

static void BM_BernoulliMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bernoulli_poly_via_moments(n, 0.25));
  }
}
BENCHMARK(BM_BernoulliMoment)->Arg(2)->Arg(12);

BENCHMARK_MAIN();
