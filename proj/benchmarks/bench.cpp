#include "br/arrow.hpp"
#include "br/embedder.hpp"
#include "br/graph.hpp"
#include "br/io.hpp"
#include "br/subgraph.hpp"

#include <benchmark/benchmark.h>

using namespace br;

static void BM_ArrowsK6K3(benchmark::State& state) {
    Graph k6 = complete_graph(6), k3 = complete_graph(3);
    for (auto _ : state) {
        auto out = arrows(k6, k3, 2);
        benchmark::DoNotOptimize(out.verdict);
    }
}
BENCHMARK(BM_ArrowsK6K3);

static void BM_ArrowsK5K3Refuted(benchmark::State& state) {
    Graph k5 = complete_graph(5), k3 = complete_graph(3);
    for (auto _ : state) {
        auto out = arrows(k5, k3, 2);
        benchmark::DoNotOptimize(out.verdict);
    }
}
BENCHMARK(BM_ArrowsK5K3Refuted);

static void BM_SubgraphSearch(benchmark::State& state) {
    Rng rng(7);
    Graph host = gnp(40, 0.3, rng);
    Graph pattern = cycle_graph(6);
    for (auto _ : state) {
        auto found = find_subgraph(host, pattern);
        benchmark::DoNotOptimize(found.has_value());
    }
}
BENCHMARK(BM_SubgraphSearch);

static void BM_MaxBiclique(benchmark::State& state) {
    Rng rng(13);
    Bipartite b(20, 20);
    for (int l = 0; l < 20; ++l)
        for (int r = 0; r < 20; ++r)
            if (rng.next_double() < 0.5) b.add(l, r);
    for (auto _ : state) {
        auto res = max_balanced_biclique(b);
        benchmark::DoNotOptimize(res.t);
    }
}
BENCHMARK(BM_MaxBiclique);

static void BM_Graph6Parse(benchmark::State& state) {
    Rng rng(5);
    std::string text = emit_graph6(gnp(64, 0.5, rng));
    for (auto _ : state) {
        Graph g = parse_graph6(text);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_Graph6Parse);

static void BM_GreedyEmbedTripartite(benchmark::State& state) {
    Rng rng(3);
    int sz = 64;
    Graph g(3 * sz);
    std::vector<std::vector<int>> parts(3);
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < sz; ++v) parts[i].push_back(i * sz + v);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (rng.next_double() < 0.5) g.add_edge(u, v);
    PartiteGraph gamma(g, parts);
    Graph k3 = complete_graph(3);
    for (auto _ : state) {
        auto res = find_blowup_greedy(gamma, k3);
        benchmark::DoNotOptimize(res.achieved_t);
    }
}
BENCHMARK(BM_GreedyEmbedTripartite);

BENCHMARK_MAIN();
