#include <benchmark/benchmark.h>

#include "hilb/exactmath.hpp"
#include "hilb/qseries.hpp"
#include "hilb/rademacher.hpp"
#include "hilb/specfun.hpp"

using namespace hilb;

namespace {

void BM_eta_series(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_product_series(-24, 0, order));
  }
}
BENCHMARK(BM_eta_series)->Arg(200)->Arg(500);

void BM_dedekind_sum(benchmark::State& state) {
  unsigned long k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind_sum(1234, k));
  }
}
BENCHMARK(BM_dedekind_sum)->Arg(4099)->Arg((1L << 20) + 7);

void BM_bessel_i(benchmark::State& state) {
  PrecisionContext ctx(128, 50.0);
  Real x = Real::of(50, ctx.working_bits());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i(BesselOrder{3}, x, ctx));
  }
}
BENCHMARK(BM_bessel_i);

void BM_l_star(benchmark::State& state) {
  EtaExponents e{-1, 0};
  PrecisionContext ctx(128, bessel_argument_bound(e, 10));
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_star(0, e, Rational(0), 5, 10, ctx));
  }
}
BENCHMARK(BM_l_star);

void BM_truncated_sum(benchmark::State& state) {
  EtaExponents e{-1, 0};
  Seeds seeds = seeds_for(e);
  PrecisionContext ctx = suggested_context(e, 6, 128);
  long cap = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        truncated_sum(e, 6, cap, ctx, InverseConvention::kEven, seeds));
  }
}
BENCHMARK(BM_truncated_sum)->Arg(10)->Arg(75);

void BM_exact_coefficient(benchmark::State& state) {
  EtaExponents e{-24, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_coefficient(e, 2));
  }
}
BENCHMARK(BM_exact_coefficient);

}  // namespace

BENCHMARK_MAIN();
