#include <benchmark/benchmark.h>

#include "specgraph/graph.hpp"
#include "specgraph/laplacian.hpp"
#include "specgraph/ncut_k.hpp"
#include "specgraph/oracle.hpp"
#include "specgraph/random.hpp"
#include "specgraph/spectra.hpp"

namespace sg = specgraph;

static void BM_EighRandom(benchmark::State& state) {
    sg::Rng rng(1);
    const sg::SymMatrix s(sg::random_symmetric(static_cast<std::size_t>(state.range(0)), rng));
    for (auto _ : state) benchmark::DoNotOptimize(sg::eigh(s).values.data());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EighRandom)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_EighBucky(benchmark::State& state) {
    const auto l = sg::laplacian(sg::bucky());
    for (auto _ : state) benchmark::DoNotOptimize(sg::eigh(l).values.data());
}
BENCHMARK(BM_EighBucky);

static void BM_BruteNcut(benchmark::State& state) {
    sg::Rng rng(2);
    const auto g = sg::random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.5, rng);
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sg::brute_ncut(g, 3, workers).best_value);
}
BENCHMARK(BM_BruteNcut)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

static void BM_Cluster(benchmark::State& state) {
    sg::Rng rng(3);
    const auto g = sg::random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.2, rng);
    sg::ClusterOptions opts;
    opts.rescale = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(sg::cluster(g, 4, opts).ncut);
}
BENCHMARK(BM_Cluster)->Args({40, 0})->Args({40, 1})->Args({100, 0})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
