#include <benchmark/benchmark.h>

#include "struvebound/bounds.hpp"
#include "struvebound/harness.hpp"
#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"

namespace sb = struvebound;

static void BM_StruveL(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sb::specfun::struve_l_wide(1.5, x));
}
BENCHMARK(BM_StruveL)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

static void BM_BesselK(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sb::specfun::bessel_k_scaled(2.5, x));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(10)->Arg(100);

static void BM_IntegralF(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sb::integral::F(1.0, 0.5, x));
}
BENCHMARK(BM_IntegralF)->Arg(1)->Arg(10)->Arg(100);

static void BM_IntegralQuad(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sb::integral::integral_quad({1.0, 1.0, 0.5, 10.0}));
}
BENCHMARK(BM_IntegralQuad);

static void BM_Tables(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sb::harness::reproduce_table(0));
}
BENCHMARK(BM_Tables)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
