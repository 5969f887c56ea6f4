#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "zonal/fft.hpp"
#include "zonal/series.hpp"

static void BM_Fft(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<std::complex<double>> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = {1.0 / (1.0 + i), 0.5};
    for (auto _ : state) {
        auto y = x;
        zonal::fft::transform(y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNLogN);

static void BM_CauchyLaplace(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zonal::cauchy_coefficients(zonal::Laplace{1.0}));
}
BENCHMARK(BM_CauchyLaplace)->Unit(benchmark::kMillisecond);

// deep NTKs pay for the recursion at every sample point
static void BM_CauchyNtk(benchmark::State& state) {
    const zonal::Ntk kernel{static_cast<int>(state.range(0)), 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(zonal::cauchy_coefficients(kernel));
}
BENCHMARK(BM_CauchyNtk)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_EndpointSum(benchmark::State& state) {
    const auto s = zonal::cauchy_coefficients(zonal::Ntk{3, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(zonal::endpoint_sum(s, zonal::Endpoint::kMinusOne));
}
BENCHMARK(BM_EndpointSum);
