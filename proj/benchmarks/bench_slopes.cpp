#include <benchmark/benchmark.h>

#include "toricnp/geometry.hpp"
#include "toricnp/slope_comb.hpp"

#include <vector>

using namespace toricnp;

static void PredictedPolygon(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = slopes::predicted_np(n, 1000003);
        benchmark::DoNotOptimize(r.polygon);
    }
}
BENCHMARK(PredictedPolygon)->DenseRange(3, 12, 3);

static void VandermondeDeterminant(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<int> xs;
    for (int i = 0; i < m; ++i) xs.push_back(2 * i + 1);
    for (auto _ : state) {
        auto d = slopes::determinant(slopes::vandermonde_like(xs));
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(VandermondeDeterminant)->DenseRange(4, 12, 4);

static void HodgeNumbers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto h = geometry::hodge_numbers(n);
        benchmark::DoNotOptimize(h.H.data());
    }
}
BENCHMARK(HodgeNumbers)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
