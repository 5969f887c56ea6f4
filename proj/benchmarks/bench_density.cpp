#include <benchmark/benchmark.h>

#include "zonal/stable_density.hpp"

static void BM_DensitySeries(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(zonal::density_series(0.5, t));
}
// small t needs many terms before they start to shrink
BENCHMARK(BM_DensitySeries)->Arg(5)->Arg(50)->Arg(500)->Arg(1000000);

static void BM_CmCertificate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zonal::cm_certificate(1.0, 1.0, 1.5, 1.0));
}
BENCHMARK(BM_CmCertificate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
