#include <benchmark/benchmark.h>

#include "frobstrat/bundle.hpp"
#include "frobstrat/curve.hpp"
#include "frobstrat/enumerate.hpp"
#include "frobstrat/polygon.hpp"
#include "frobstrat/verify.hpp"

using namespace frobstrat;

static void BM_EnumerateAdmissible(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    const std::int64_t g = state.range(1);
    const auto ctx = make_context(2, g);
    for (auto _ : state) {
        auto family = admissible_polygons(r, 0, ctx);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(BM_EnumerateAdmissible)->Args({2, 2})->Args({3, 2})->Args({4, 2})->Args({3, 3})->Args({4, 3});

static void BM_Dominates(benchmark::State& state) {
    const auto oper = oper_polygon(6, 0, 3);
    const auto chord = straight_polygon(6, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dominates(oper, chord));
        benchmark::DoNotOptimize(dominates(chord, oper));
    }
}
BENCHMARK(BM_Dominates);

static void BM_BuildPoset(benchmark::State& state) {
    const auto family = admissible_polygons(state.range(0), 0, make_context(2, 2));
    for (auto _ : state) {
        auto poset = build_poset(family);
        benchmark::DoNotOptimize(poset);
    }
}
BENCHMARK(BM_BuildPoset)->Arg(3)->Arg(4);

static void BM_GapEquivalence(benchmark::State& state) {
    const auto ctx = make_context(state.range(0), 2);
    for (auto _ : state) {
        auto report = verify_gap_equivalence(ctx, 0);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_GapEquivalence)->Arg(2)->Arg(3);

static void BM_CanonicalProfile(benchmark::State& state) {
    const auto ctx = make_context(31, 2);
    const BundleInvariants e(5, 7);
    for (auto _ : state) {
        auto profile = canonical_filtration_profile(e, ctx);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(BM_CanonicalProfile);

BENCHMARK_MAIN();
