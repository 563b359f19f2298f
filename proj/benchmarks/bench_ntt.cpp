#include <benchmark/benchmark.h>

#include "toricnp/ntt.hpp"

#include <random>
#include <vector>

using namespace toricnp::ntt;

static void ForwardInverse(benchmark::State& state) {
    const int log_len = static_cast<int>(state.range(0));
    const auto prime = find_primes(1, log_len, 1).front();
    const Plan plan(prime, log_len);
    std::mt19937_64 rng(7);
    std::vector<u64> a(plan.size());
    for (auto& x : a) x = plan.arith().to_mont(rng() % prime.modulus);
    for (auto _ : state) {
        plan.forward(a);
        plan.inverse(a);
        benchmark::DoNotOptimize(a.data());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(plan.size()));
}
BENCHMARK(ForwardInverse)->DenseRange(10, 20, 2)->Complexity(benchmark::oNLogN);

static void MontgomeryMul(benchmark::State& state) {
    const Montgomery m(find_primes(1, 20, 1).front().modulus);
    u64 x = m.to_mont(3), y = m.to_mont(5);
    for (auto _ : state) {
        x = m.mul(x, y);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(MontgomeryMul);

BENCHMARK_MAIN();
