#include <benchmark/benchmark.h>

#include "hprod/css.hpp"

using namespace hprod;

namespace {

CssCode product_code(std::uint64_t seed) {
    Rng rng(seed);
    const Field f(3);
    const ComplexShape s = ComplexShape::from_hl(1, 1);
    return extract_css(product(random_boundary(s, f, rng).complex, random_boundary(s, f, rng).complex).complex());
}

}  // namespace

static void BM_DistanceExhaustive(benchmark::State& state) {
    const CssCode code = product_code(6);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_DistanceExhaustive)->Unit(benchmark::kMillisecond);

static void BM_DistanceBounded(benchmark::State& state) {
    const CssCode code = product_code(6);
    const DistanceOptions opts{DistanceMethod::bounded, static_cast<std::size_t>(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code, opts));
}
BENCHMARK(BM_DistanceBounded)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
