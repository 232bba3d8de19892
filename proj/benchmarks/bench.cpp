#include <benchmark/benchmark.h>

#include "folkman/arrowing.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumeration.hpp"
#include "folkman/extension.hpp"
#include "folkman/invariants.hpp"

using namespace folkman;

namespace {

void BM_ArrowsK6Edge(benchmark::State& state) {
    Graph k3 = complete_graph(3);
    ArrowingInstance instance{complete_graph(6), ArrowingMode::Edge, {k3, k3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(arrows(instance).outcome);
    }
}
BENCHMARK(BM_ArrowsK6Edge);

void BM_ArrowsTheorem4Vertex(benchmark::State& state) {
    Graph k3 = complete_graph(3);
    ArrowingInstance instance{theorem4_graph(), ArrowingMode::Vertex, {k3, k3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(arrows(instance).outcome);
    }
}
BENCHMARK(BM_ArrowsTheorem4Vertex);

void BM_IndependenceG127(benchmark::State& state) {
    Graph g = cubic_residue_graph(127);
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_number(g).size);
    }
}
BENCHMARK(BM_IndependenceG127)->Unit(benchmark::kMillisecond);

void BM_B12FreeG127(benchmark::State& state) {
    Graph g = cubic_residue_graph(127);
    Graph b12 = book_graph(12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_free(g, b12));
    }
}
BENCHMARK(BM_B12FreeG127)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
    Graph g = graph_from_code(8, 0x0f3a25c1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(g));
    }
}
BENCHMARK(BM_CanonicalCode);

void BM_BuildGoodColoring(benchmark::State& state) {
    Graph g = join(complete_graph(1), cycle_graph(5));
    GraphClass cls = GraphClass::b3_free();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_good_coloring(g, cls).size());
    }
}
BENCHMARK(BM_BuildGoodColoring);

}  // namespace

BENCHMARK_MAIN();
