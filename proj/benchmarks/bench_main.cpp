#include <benchmark/benchmark.h>

#include "twobridge/census.hpp"
#include "twobridge/smoothing.hpp"
#include "twobridge/surface.hpp"
#include "twobridge/tree.hpp"

namespace {

using namespace twobridge;

void BM_PositiveExpansion(benchmark::State& state) {
    Fraction f(82, 429);
    for (auto _ : state) benchmark::DoNotOptimize(positive_expansion(f));
}
BENCHMARK(BM_PositiveExpansion);

void BM_BuildSurfaces(benchmark::State& state) {
    Fraction f(82, 429);
    for (auto _ : state) benchmark::DoNotOptimize(build_surfaces(f));
}
BENCHMARK(BM_BuildSurfaces);

void BM_OracleEnumeration(benchmark::State& state) {
    Fraction f(82, 429);
    std::size_t depth = default_search_depth(positive_expansion(f));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ht_expansions(f, depth));
}
BENCHMARK(BM_OracleEnumeration);

void BM_Seminorm(benchmark::State& state) {
    std::vector<Surface> surfaces = build_surfaces(Fraction(82, 429));
    PeripheralCurve c{Int(7), Int(-3)};
    for (auto _ : state) benchmark::DoNotOptimize(cgls_seminorm(surfaces, c));
}
BENCHMARK(BM_Seminorm);

void BM_EnumerateActions(benchmark::State& state) {
    Expansion n({5, 4, 3, 6});
    Smoothing s = Smoothing::parse("0100");
    BasicTree tree = assemble_basic_tree(n, s);
    Expansion m = generate_expansion(n, s);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_actions(tree, m));
}
BENCHMARK(BM_EnumerateActions);

void BM_ExportDot(benchmark::State& state) {
    BasicTree tree = assemble_basic_tree(Expansion({5, 4, 3, 6}), Smoothing::parse("1010"));
    for (auto _ : state) benchmark::DoNotOptimize(export_dot(tree));
}
BENCHMARK(BM_ExportDot);

void BM_CensusAlpha(benchmark::State& state) {
    CensusOptions options;
    options.max_alpha = state.range(0);
    options.jobs = 1;
    for (auto _ : state) {
        CensusReport report = run_census(options);
        if (!report.ok()) state.SkipWithError("census reported violations");
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_CensusAlpha)->Arg(25)->Arg(49)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
