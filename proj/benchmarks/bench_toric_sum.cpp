#include <benchmark/benchmark.h>

#include "toricnp/toric_sum.hpp"

#include <vector>

using namespace toricnp::oracle;

namespace {

std::vector<std::int64_t> all_t(int p) {
    std::vector<std::int64_t> ts;
    for (int t = 1; t < p; ++t) ts.push_back(t);
    return ts;
}

void run(benchmark::State& state, Algorithm algorithm, bool every_t) {
    const int p = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const SumContext ctx(p, k);
    const auto ts = every_t ? all_t(p) : std::vector<std::int64_t>{1};
    for (auto _ : state) {
        auto h = ctx.histograms(3, 1, 1, ts, algorithm);
        benchmark::DoNotOptimize(h.data());
    }
    state.counters["sums"] = static_cast<double>(ts.size());
}

}  // namespace

static void Naive(benchmark::State& state) { run(state, Algorithm::naive, false); }
static void Convolution(benchmark::State& state) { run(state, Algorithm::convolution, false); }
static void NaiveAllT(benchmark::State& state) { run(state, Algorithm::naive, true); }
static void ConvolutionAllT(benchmark::State& state) { run(state, Algorithm::convolution, true); }

BENCHMARK(Naive)->Args({5, 4})->Args({7, 4})->Args({11, 3})->Args({101, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(Convolution)->Args({5, 4})->Args({7, 4})->Args({11, 3})->Args({101, 2})->Args({5, 7})->Args({47, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(NaiveAllT)->Args({11, 3})->Args({31, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(ConvolutionAllT)->Args({11, 3})->Args({31, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
