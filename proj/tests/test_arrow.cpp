#include "br/arrow.hpp"
#include "br/graph.hpp"
#include "br/hom.hpp"

#include <doctest.h>

#include <algorithm>

using namespace br;

namespace {

bool p3_predicate(const Graph& g) {
    if (g.max_degree() >= 3) return true;
    // Odd cycle = not bipartite; 2-color BFS.
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("contains_mono_copy") {
    Graph k6 = complete_graph(6);
    EdgeColoring all_one(k6, 2);
    for (int e = 0; e < all_one.edge_count(); ++e) all_one.set_color(e, 1);
    CHECK(contains_mono_copy(all_one, complete_graph(3), 1).has_value());
    CHECK(!contains_mono_copy(all_one, complete_graph(3), 2).has_value());

    // Single-vertex pattern always embeds.
    CHECK(contains_mono_copy(all_one, empty_graph(1), 2).has_value());

    // Alternating C_4: each color class is a perfect matching, no P_3.
    Graph c4 = cycle_graph(4);
    EdgeColoring alt(c4, 2);
    alt.set_color(alt.edge_index(0, 1), 1);
    alt.set_color(alt.edge_index(2, 3), 1);
    alt.set_color(alt.edge_index(1, 2), 2);
    alt.set_color(alt.edge_index(0, 3), 2);
    CHECK(!contains_mono_copy(alt, path_graph(3), 1).has_value());
    CHECK(!contains_mono_copy(alt, path_graph(3), 2).has_value());
}

TEST_CASE("arrows ground truth") {
    CHECK(arrows(complete_graph(6), complete_graph(3), 2).verdict == Verdict::Proved);

    SearchOutcome k5 = arrows(complete_graph(5), complete_graph(3), 2);
    REQUIRE(k5.verdict == Verdict::Refuted);
    REQUIRE(k5.coloring.has_value());
    CHECK(coloring_avoids_mono(*k5.coloring, complete_graph(3)));

    CHECK(arrows(cycle_graph(5), path_graph(3), 2).verdict == Verdict::Proved);
    CHECK(arrows(cycle_graph(4), path_graph(3), 2).verdict == Verdict::Refuted);
}

TEST_CASE("arrows budget exhaustion is reported") {
    SearchOutcome out = arrows(complete_graph(6), complete_graph(3), 2, 5);
    CHECK(out.verdict == Verdict::BudgetExhausted);
}

TEST_CASE("hom_arrows") {
    // K_2 contains the hom image K_2 of P_3 monochromatically.
    CHECK(hom_arrows(complete_graph(2), path_graph(3), 2).verdict == Verdict::Proved);

    // hom_arrows == arrows when H = K_3 (no proper hom image).
    for (const Graph& g : {complete_graph(5), complete_graph(6), cycle_graph(5)})
        CHECK(hom_arrows(g, complete_graph(3), 2).verdict ==
              arrows(g, complete_graph(3), 2).verdict);

    CHECK(hom_arrows(cycle_graph(4), path_graph(3), 2).verdict == Verdict::Proved);
    CHECK(arrows(cycle_graph(4), path_graph(3), 2).verdict == Verdict::Refuted);
}

TEST_CASE("ramsey minimality") {
    CHECK(is_ramsey_minimal(complete_graph(6), complete_graph(3), 2).verdict == Verdict::Proved);
    CHECK(is_ramsey_minimal(star_graph(3), path_graph(3), 2).verdict == Verdict::Proved);
    CHECK(is_ramsey_minimal(cycle_graph(7), path_graph(3), 2).verdict == Verdict::Proved);
    // K_7 arrows K_3 but is not minimal.
    CHECK(is_ramsey_minimal(complete_graph(7), complete_graph(3), 2).verdict == Verdict::Refuted);
    // C_4 does not even arrow P_3.
    CHECK(is_ramsey_minimal(cycle_graph(4), path_graph(3), 2).verdict == Verdict::Refuted);
}

TEST_CASE("P_3 characterization on small connected graphs") {
    // Degree >= 3 or odd cycle, over all connected graphs with <= 6 vertices
    // (the full <= 7 sweep runs in the acceptance suite).
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            bool predicted = p3_predicate(g);
            bool proved = arrows(g, path_graph(3), 2).verdict == Verdict::Proved;
            CHECK(predicted == proved);
        }
    }
}

TEST_CASE("arrow monotonicity under supergraphs") {
    Rng rng(99);
    Graph base = cycle_graph(5); // arrows P_3
    REQUIRE(arrows(base, path_graph(3), 2).verdict == Verdict::Proved);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = base;
        for (int extra = 0; extra < 2; ++extra) {
            int u = rng.below_int(5), v = rng.below_int(5);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        CHECK(arrows(g, path_graph(3), 2).verdict == Verdict::Proved);
    }
}

TEST_CASE("color permutation preserves refutation certificates") {
    SearchOutcome k5 = arrows(complete_graph(5), complete_graph(3), 2);
    REQUIRE(k5.coloring.has_value());
    EdgeColoring swapped = *k5.coloring;
    std::vector<int> colors = swapped.colors();
    for (int& c : colors) c = 3 - c;
    swapped.set_colors(colors);
    CHECK(coloring_avoids_mono(swapped, complete_graph(3)));
}
