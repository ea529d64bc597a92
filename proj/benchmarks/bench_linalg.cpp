#include <benchmark/benchmark.h>

#include "hprod/linalg.hpp"

using namespace hprod;

static void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const Matrix m = random_matrix(n, n, Field(3), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 128);

static void BM_KernelBasis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const Field f(5);
    const Matrix m = random_matrix(n, n / 2, f, rng) * random_matrix(n / 2, n, f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(2)->Range(8, 64);

static void BM_RandomInvertible(benchmark::State& state) {
    Rng rng(3);
    const Field f(3);
    for (auto _ : state) benchmark::DoNotOptimize(random_invertible(static_cast<std::size_t>(state.range(0)), f, rng));
}
BENCHMARK(BM_RandomInvertible)->Arg(5)->Arg(20);
