#include <benchmark/benchmark.h>

#include "treeshift/generate.hpp"
#include "treeshift/ptas.hpp"
#include "treeshift/sqrtdecomp.hpp"
#include "treeshift/treewidth.hpp"

using namespace treeshift;

static void BM_ExactTreewidthGrid(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Graph g = grid_graph(m, m);
    for (auto _ : state) {
        auto res = exact_treewidth(g);
        benchmark::DoNotOptimize(res.width);
    }
    state.SetLabel("grid " + std::to_string(m) + "x" + std::to_string(m));
}
BENCHMARK(BM_ExactTreewidthGrid)->Arg(3)->Arg(4)->Arg(5);

static void BM_HeuristicDecomposition(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = random_connected(n, 0.1, 42);
    for (auto _ : state) {
        auto td = heuristic_decomposition(g);
        benchmark::DoNotOptimize(td.blocks.size());
    }
}
BENCHMARK(BM_HeuristicDecomposition)->Arg(50)->Arg(100)->Arg(200);

static void BM_PtasLocalGrid(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Graph g = grid_graph(m, m);
    PtasConfig cfg;
    cfg.epsilon = 0.5;
    for (auto _ : state) {
        auto res = ptas_local(g, ProblemKind::VertexCover, cfg);
        benchmark::DoNotOptimize(res.solution.value);
    }
}
BENCHMARK(BM_PtasLocalGrid)->Arg(6)->Arg(10)->Arg(14);

static void BM_PtasDominatingSet(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = stacked_planar(n, 3, 7);
    PtasConfig cfg;
    cfg.epsilon = 0.5;
    for (auto _ : state) {
        auto res = ptas_local(g, ProblemKind::DominatingSet, cfg);
        benchmark::DoNotOptimize(res.solution.value);
    }
}
BENCHMARK(BM_PtasDominatingSet)->Arg(30)->Arg(60);

static void BM_SqrtDecomposition(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Graph g = grid_graph(m, m);
    for (auto _ : state) {
        auto rep = sqrt_decomposition(g, 3, 0);
        benchmark::DoNotOptimize(rep.width);
    }
}
BENCHMARK(BM_SqrtDecomposition)->Arg(10)->Arg(16)->Arg(20);

static void BM_CliqueSumScheme(benchmark::State& state) {
    auto inst = clique_sum_of(static_cast<int>(state.range(0)), 8, 2, 1, 11);
    PtasConfig cfg;
    cfg.epsilon = 0.5;
    cfg.mu = 2;
    for (auto _ : state) {
        auto res = ptas_cliquesum(inst.graph, inst.decomposition,
                                  ProblemKind::VertexCover, cfg);
        benchmark::DoNotOptimize(res.solution.value);
    }
}
BENCHMARK(BM_CliqueSumScheme)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
