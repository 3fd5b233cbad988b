#include "br/embedder.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"
#include "br/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace br;

namespace {

// Brute-force maximum balanced biclique: try all t-subsets of the left side.
int oracle_max_biclique(const Bipartite& b) {
    int best = 0;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start, Bitset common) -> void {
        if (!subset.empty()) {
            int t = static_cast<int>(subset.size());
            best = std::max(best, std::min(t, common.count()));
        }
        for (int l = start; l < b.left; ++l) {
            Bitset next = common;
            next &= b.adj[l];
            if (next.count() == 0 && !subset.empty()) continue;
            subset.push_back(l);
            self(self, l + 1, next);
            subset.pop_back();
        }
    };
    Bitset all(b.right);
    all.set_all();
    rec(rec, 0, all);
    return best;
}

PartiteGraph random_tripartite(int part_size, double p, Rng& rng) {
    Graph g(3 * part_size);
    std::vector<std::vector<int>> parts(3);
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < part_size; ++v) parts[i].push_back(i * part_size + v);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (rng.next_double() < p) g.add_edge(u, v);
    return PartiteGraph(g, parts);
}

} // namespace

TEST_CASE("kst_biclique") {
    // Complete bipartite: every t <= n works.
    Bipartite complete(5, 5);
    for (int l = 0; l < 5; ++l)
        for (int r = 0; r < 5; ++r) complete.add(l, r);
    for (int t = 1; t <= 5; ++t) CHECK(kst_biclique(complete, t).has_value());
    CHECK(!kst_biclique(complete, 6).has_value());

    // Perfect matching: no K_{2,2} (exact mode).
    Bipartite matching(4, 4);
    for (int i = 0; i < 4; ++i) matching.add(i, i);
    CHECK(kst_biclique(matching, 1).has_value());
    CHECK(!kst_biclique(matching, 2).has_value());
}

TEST_CASE("kst_biclique against brute force") {
    Rng rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        int nl = 3 + rng.below_int(8), nr = 3 + rng.below_int(8);
        Bipartite b(nl, nr);
        for (int l = 0; l < nl; ++l)
            for (int r = 0; r < nr; ++r)
                if (rng.next_double() < 0.5) b.add(l, r);
        int oracle = oracle_max_biclique(b);
        BicliqueResult got = max_balanced_biclique(b);
        CHECK(got.t == oracle);
        // Witness really is a biclique.
        for (int l : got.left)
            for (int r : got.right) CHECK(b.adj[l].test(r));
    }
}

TEST_CASE("choose_vertex_order") {
    Graph k3 = complete_graph(3);
    std::vector<std::vector<double>> d(3, std::vector<double>(3, 0));
    d[0][1] = d[1][0] = 0.3;
    d[0][2] = d[2][0] = 0.6;
    d[1][2] = d[2][1] = 0.9;
    auto order = choose_vertex_order(k3, d);
    // Minimum-density edge {0,1} first.
    CHECK(((order[0] == 0 && order[1] == 1) || (order[0] == 1 && order[1] == 0)));

    // All ties: deterministic lowest-index order.
    std::vector<std::vector<double>> flat(3, std::vector<double>(3, 0.5));
    auto tie_order = choose_vertex_order(k3, flat);
    CHECK(tie_order == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(choose_vertex_order(empty_graph(3), {}), std::invalid_argument);
}

TEST_CASE("is_good_copy") {
    PartiteGraph gamma = blowup(complete_graph(3), 4); // complete pairs
    Graph k3 = complete_graph(3);
    std::vector<int> order{0, 1, 2};
    std::vector<std::vector<double>> p(3, std::vector<double>(3, 1.0));
    // Every single vertex is good with p = 1 and any small eps.
    for (int v : gamma.parts[0])
        CHECK(is_good_copy(gamma, k3, order, p, 0.05, {v}));

    // A vertex with no edges toward a required part is not good.
    Graph g = gamma.g;
    for (int w : gamma.parts[1]) if (g.has_edge(gamma.parts[0][0], w)) g.remove_edge(gamma.parts[0][0], w);
    PartiteGraph damaged(g, gamma.parts);
    CHECK(!is_good_copy(damaged, k3, order, p, 0.05, {gamma.parts[0][0]}));
}

TEST_CASE("find_blowup_greedy recovers blowups exactly") {
    Graph k3 = complete_graph(3);
    for (int s = 2; s <= 4; ++s) {
        EmbedderResult res = find_blowup_greedy(blowup(k3, s), k3);
        CHECK(res.achieved_t == s);
        CHECK(verify_embedding(res.certificate, blowup(k3, s), k3, s).ok);
    }
}

TEST_CASE("find_blowup_greedy on a single-edge pattern") {
    // H = K_2 degenerates to the biclique step alone.
    PartiteGraph gamma = blowup(complete_graph(2), 5);
    EmbedderResult res = find_blowup_greedy(gamma, complete_graph(2));
    CHECK(res.achieved_t == 5);
    CHECK(verify_embedding(res.certificate, gamma, complete_graph(2), 5).ok);
}

TEST_CASE("greedy never beats the exhaustive oracle") {
    Rng rng(777);
    Graph k3 = complete_graph(3);
    for (int trial = 0; trial < 60; ++trial) {
        int sz = 3 + rng.below_int(8);
        double p = 0.3 + 0.6 * rng.next_double();
        PartiteGraph gamma = random_tripartite(sz, p, rng);
        EmbedderResult res = find_blowup_greedy(gamma, k3);
        int oracle = max_canonical_blowup(gamma, k3);
        CHECK(res.achieved_t <= oracle);
        if (res.achieved_t >= 1)
            CHECK(verify_embedding(res.certificate, gamma, k3, res.achieved_t).ok);
    }
}

TEST_CASE("targets are non-increasing in alpha") {
    Rng rng(31);
    PartiteGraph gamma = random_tripartite(10, 0.6, rng);
    Graph k3 = complete_graph(3);
    EmbedderParams lo, hi;
    lo.alpha = 0.02;
    hi.alpha = 0.2;
    EmbedderResult rl = find_blowup_greedy(gamma, k3, lo);
    EmbedderResult rh = find_blowup_greedy(gamma, k3, hi);
    CHECK(rh.target_formula_t <= rl.target_formula_t);
    for (std::size_t i = 0; i < std::min(rl.stages.size(), rh.stages.size()); ++i)
        if (rl.stages[i].i >= 2)
            CHECK(rh.stages[i].target_t <= rl.stages[i].target_t);
}

TEST_CASE("stage recursion audit") {
    // t_i = floor((q_i - k*eps) * t_{i-1}) for stages i >= 3.
    Rng rng(55);
    Graph k4 = complete_graph(4);
    Graph g(4 * 10);
    std::vector<std::vector<int>> parts(4);
    for (int i = 0; i < 4; ++i)
        for (int v = 0; v < 10; ++v) parts[i].push_back(i * 10 + v);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (rng.next_double() < 0.8) g.add_edge(u, v);
    EmbedderResult res = find_blowup_greedy(PartiteGraph(g, parts), k4);
    int k = 4;
    for (std::size_t s = 0; s + 1 < res.stages.size(); ++s) {
        const StageReport& prev = res.stages[s];
        const StageReport& cur = res.stages[s + 1];
        if (cur.i < 3) continue;
        auto expect = static_cast<std::int64_t>(
            std::floor((cur.q - k * res.epsilon) * static_cast<double>(prev.target_t)));
        if (expect < 0) expect = 0;
        CHECK(cur.target_t == expect);
    }
}
