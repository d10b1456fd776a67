// Benchmarks for the hot paths: Nielsen enumeration, equivalence classes,
// braid orbits, and the Heisenberg census.

#include <benchmark/benchmark.h>

#include "hurwitz/analysis.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/lift.hpp"

using namespace hurwitz;

namespace {

AnalysisConfig config_for(FiniteGroup G, std::vector<std::string> labels, bool reduce) {
    AnalysisConfig config;
    config.group = std::move(G);
    config.class_labels = std::move(labels);
    config.reduce = reduce;
    return config;
}

void bench_enumerate_alternating4(benchmark::State& state) {
    auto gd = GroupData::make(catalog::alternating(4));
    auto cv = resolve_class_vector(*gd, {"+3", "+3", "-3", "-3"});
    for (auto _ : state) {
        auto ni = NielsenClass::enumerate(gd, cv, 10000000);
        benchmark::DoNotOptimize(ni.count());
    }
}
BENCHMARK(bench_enumerate_alternating4);

void bench_full_analysis_alternating4(benchmark::State& state) {
    auto config = config_for(catalog::alternating(4), {"+3", "+3", "-3", "-3"}, true);
    for (auto _ : state) {
        auto an = run_analysis(config);
        benchmark::DoNotOptimize(an.orbits.size());
    }
}
BENCHMARK(bench_full_analysis_alternating4);

void bench_full_analysis_alternating5(benchmark::State& state) {
    auto config = config_for(catalog::alternating(5), {"3", "3", "3", "3"}, true);
    for (auto _ : state) {
        auto an = run_analysis(config);
        benchmark::DoNotOptimize(an.orbits.size());
    }
}
BENCHMARK(bench_full_analysis_alternating5);

void bench_dihedral_level25(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = dihedral_modular_report(5, 1);
        benchmark::DoNotOptimize(rep.inner.orbit_sizes.size());
    }
}
BENCHMARK(bench_dihedral_level25);

void bench_sh_incidence_alternating4(benchmark::State& state) {
    auto an = run_analysis(config_for(catalog::alternating(4), {"+3", "+3", "-3", "-3"}, true));
    for (auto _ : state) {
        auto inc = sh_incidence(an);
        benchmark::DoNotOptimize(inc.matrix.size());
    }
}
BENCHMARK(bench_sh_incidence_alternating4);

void bench_heisenberg_census5(benchmark::State& state) {
    for (auto _ : state) {
        auto census = heisenberg_orbit_census(5);
        benchmark::DoNotOptimize(census.rows.size());
    }
}
BENCHMARK(bench_heisenberg_census5);

}  // namespace

BENCHMARK_MAIN();
