#include <benchmark/benchmark.h>

#include "hprod/counting.hpp"

using namespace hprod;

static void BM_CountZ(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    const Field f(3);
    for (auto _ : state) benchmark::DoNotOptimize(count_Z(2, L, L, L, f));
}
BENCHMARK(BM_CountZ)->RangeMultiplier(2)->Range(2, 32);

static void BM_CountGamma(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    const Field f(5);
    const std::size_t n = 2 * L + 1, np = n - 1;
    for (auto _ : state) benchmark::DoNotOptimize(count_Gamma(n, np, 1, L, L, L, f));
}
BENCHMARK(BM_CountGamma)->RangeMultiplier(2)->Range(2, 16);
