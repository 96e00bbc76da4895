#include <benchmark/benchmark.h>

#include "vjac/degposet.hpp"
#include "vjac/polarization.hpp"
#include "vjac/symmetry.hpp"

using namespace vjac;

static void BM_BuildDomain(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        StabilityDomain d = StabilityDomain::build(g, n);
        benchmark::DoNotOptimize(d.triangles().size());
    }
}
BENCHMARK(BM_BuildDomain)->Args({3, 0})->Args({4, 2})->Args({4, 4})->Args({2, 6});

static void BM_EnumerateNormalized(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    StabilityDomain d = StabilityDomain::build(g, n);
    for (auto _ : state) {
        auto out = enumerate_normalized(d);
        benchmark::DoNotOptimize(out.size());
    }
}
BENCHMARK(BM_EnumerateNormalized)->Args({3, 1})->Args({2, 2})->Args({1, 4})->Args({4, 1});

static void BM_WitnessSearch(benchmark::State& state) {
    StabilityDomain d = StabilityDomain::build(static_cast<int>(state.range(0)), 1);
    DegSet empty = make_degset(d, {});
    DegSet w1 = wall_W(d, 1);
    for (auto _ : state) {
        auto ws = witnesses(empty, w1);
        benchmark::DoNotOptimize(ws.size());
    }
}
BENCHMARK(BM_WitnessSearch)->Arg(3)->Arg(4)->Arg(5);

static void BM_Feasibility(benchmark::State& state) {
    StabilityDomain d = StabilityDomain::build(1, 6);
    VFunction phi = classical_ns(d, 2, std::vector<Rat>(6, Rat(1, 3)));
    for (auto _ : state) {
        auto L = classical_feasible(phi);
        benchmark::DoNotOptimize(L.has_value());
    }
}
BENCHMARK(BM_Feasibility);

static void BM_Upset(benchmark::State& state) {
    StabilityDomain d = StabilityDomain::build(1, 3);
    VFunction zero = make_vfunction(d, Part::Full, 0, std::vector<long long>(d.size(), 0));
    for (auto _ : state) {
        auto up = upset(zero);
        benchmark::DoNotOptimize(up.size());
    }
}
BENCHMARK(BM_Upset);

BENCHMARK_MAIN();
