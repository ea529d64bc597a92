#include <benchmark/benchmark.h>

#include "hprod/product.hpp"

using namespace hprod;

static void BM_Product(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    const Field f(3);
    const ComplexShape s = ComplexShape::from_hl(1, L);
    const auto a = random_boundary(s, f, rng).complex, b = random_boundary(s, f, rng).complex;
    for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_Product)->DenseRange(1, 4);

static void BM_Kunneth(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    const Field f(3);
    const ComplexShape s = ComplexShape::from_hl(1, L);
    const auto p = product(random_boundary(s, f, rng).complex, random_boundary(s, f, rng).complex);
    for (auto _ : state) benchmark::DoNotOptimize(kunneth_check(p));
}
BENCHMARK(BM_Kunneth)->DenseRange(1, 3);
