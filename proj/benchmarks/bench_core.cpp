#include "benchmark/benchmark.h"

#include "chevalley/decompose.hpp"
#include "chevalley/extract.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/subgroup.hpp"

using namespace chevalley;

static void BM_GroupMultiply(benchmark::State& state) {
    const GroupContext& ctx = GroupContext::get(RootLabel::G2);
    Ring r = Ring::prime_field(5);
    WordSampler ws(ctx, r, kDefaultSeed);
    GroupElement a = ws.random_element_of_group();
    GroupElement b = ws.random_element_of_group();
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_GroupMultiply);

static void BM_GaussDecompose(benchmark::State& state) {
    const GroupContext& ctx = GroupContext::get(RootLabel::B2);
    Ring r = Ring::prime_field(5);
    WordSampler ws(ctx, r, kDefaultSeed);
    GroupElement g = ws.random_element_of_group(8, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_decompose(ctx, g, CellOrientation::UmBw));
    }
}
BENCHMARK(BM_GaussDecompose);

static void BM_ExtractOverField(benchmark::State& state) {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::prime_field(3);
    WordSampler ws(ctx, r, kDefaultSeed + 1);
    GroupElement g = ws.random_element_of_group(6, 10);
    while (ctx.is_central(g)) g = ws.random_element_of_group(6, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_over_field(ctx, g));
    }
}
BENCHMARK(BM_ExtractOverField);

static void BM_ElementaryClosureGF3(benchmark::State& state) {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::prime_field(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(elementary_subgroup(ctx, r).size());
    }
}
BENCHMARK(BM_ElementaryClosureGF3);
