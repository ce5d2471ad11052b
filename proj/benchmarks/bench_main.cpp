#include <benchmark/benchmark.h>

#include "uppertail/uppertail.hpp"

namespace ut = uppertail;

namespace {

ut::Graph preset(const std::string& name, std::vector<long long> params = {}) {
    ut::GraphSpec spec;
    spec.preset = name;
    spec.params = std::move(params);
    return ut::build_graph(spec);
}

ut::WeightedGraph noisy_table(int n, double p) {
    ut::WeightedGraph g(n, p);
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            g.set(i, j, p + (1 - p) * 0.5 * ((state >> 11) * 0x1.0p-53));
        }
    return g;
}

void BM_IndependencePolynomialPetersen(benchmark::State& state) {
    ut::Graph g = preset("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(ut::independence_polynomial(g));
}
BENCHMARK(BM_IndependencePolynomialPetersen);

void BM_IndependencePolynomialC12(benchmark::State& state) {
    ut::Graph g = preset("cycle", {12});
    for (auto _ : state) benchmark::DoNotOptimize(ut::independence_polynomial(g));
}
BENCHMARK(BM_IndependencePolynomialC12);

void BM_IndependencePolynomialT5(benchmark::State& state) {
    ut::Graph g = preset("binary_tree", {5});
    for (auto _ : state) benchmark::DoNotOptimize(ut::independence_polynomial(g));
}
BENCHMARK(BM_IndependencePolynomialT5);

void BM_HomDensityElimination(benchmark::State& state) {
    ut::Graph h = preset("cycle", {4});
    ut::WeightedGraph g = noisy_table(static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ut::hom_density(h, g));
}
BENCHMARK(BM_HomDensityElimination)->Arg(20)->Arg(40)->Arg(60);

void BM_HomDensityBruteForce(benchmark::State& state) {
    ut::Graph h = preset("cycle", {4});
    ut::WeightedGraph g = noisy_table(static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ut::hom_density_bruteforce(h, g));
}
BENCHMARK(BM_HomDensityBruteForce)->Arg(20)->Arg(40);

void BM_HomDensityGradient(benchmark::State& state) {
    ut::Graph h = preset("complete_bipartite", {2, 3});
    ut::WeightedGraph g = noisy_table(static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(ut::hom_density_gradient(h, g));
}
BENCHMARK(BM_HomDensityGradient)->Arg(30)->Arg(50);

void BM_CanonicalFormPetersen(benchmark::State& state) {
    ut::Graph g = preset("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(ut::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPetersen);

void BM_FractionalMatching(benchmark::State& state) {
    ut::Graph g = preset("cycle", {31});
    for (auto _ : state) benchmark::DoNotOptimize(ut::fractional_matching_number(g));
}
BENCHMARK(BM_FractionalMatching);

void BM_CountTriangles(benchmark::State& state) {
    ut::Graph g = ut::sample_gnp(24, 0.3, 7);
    ut::Graph k3 = preset("clique", {3});
    for (auto _ : state) benchmark::DoNotOptimize(ut::count_copies(k3, g));
}
BENCHMARK(BM_CountTriangles);

void BM_FamilyEnumeration(benchmark::State& state) {
    ut::Graph g = preset("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(ut::enumerate_family(g));
}
BENCHMARK(BM_FamilyEnumeration);

} // namespace

BENCHMARK_MAIN();
