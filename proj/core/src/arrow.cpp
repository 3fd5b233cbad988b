#include "br/arrow.hpp"
#include "br/hom.hpp"
#include "br/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace br {

namespace {

// BFS vertex order from a max-degree vertex; edges ordered by the later
// endpoint's BFS position. Conflicts concentrate early under this order.
std::vector<int> edge_order(const Graph& g) {
    int n = g.vertex_count();
    int root = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(root)) root = v;
    std::vector<int> pos(n, -1);
    std::vector<int> queue;
    int next_pos = 0;
    auto push = [&](int v) {
        if (pos[v] == -1) {
            pos[v] = next_pos++;
            queue.push_back(v);
        }
    };
    push(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        g.neighbors(queue[qi]).for_each(push);
    for (int v = 0; v < n; ++v) push(v); // isolated or disconnected leftovers

    auto edges = g.edges();
    std::vector<int> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto key = [&](int e) {
            auto [u, v] = edges[e];
            int pu = pos[u], pv = pos[v];
            return std::make_pair(std::max(pu, pv), std::min(pu, pv));
        };
        return key(a) < key(b);
    });
    return order;
}

// Shared DFS over edge colorings searching for a coloring with no
// monochromatic member of `targets` (all of them checked through the new
// edge). Proved = no such coloring exists.
SearchOutcome coloring_dfs(const Graph& g, const std::vector<Graph>& targets, int r,
                           std::int64_t budget) {
    EdgeColoring coloring(g, r);
    auto edges = coloring.edges();
    auto order = edge_order(g);
    int m = static_cast<int>(edges.size());

    // Per-color incremental adjacency.
    std::vector<Graph> classes(r + 1, Graph(g.vertex_count()));

    // Targets small enough to be completed by a single edge are checked every
    // step; a target with zero edges is present iff the host is big enough,
    // which makes the arrow trivially proved or refuted up front.
    for (const Graph& t : targets) {
        if (t.edge_count() == 0) {
            if (t.vertex_count() <= g.vertex_count())
                return {Verdict::Proved, std::nullopt, std::nullopt, {0}};
            // An edgeless target larger than the host can never appear.
            for (int e = 0; e < coloring.edge_count(); ++e) coloring.set_color(e, 1);
            return {Verdict::Refuted, coloring, std::nullopt, {0}};
        }
    }

    SearchStats stats;
    bool exhausted = false;

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == m) return true; // full coloring, nothing monochromatic
        if (++stats.nodes > budget) { exhausted = true; return false; }
        int e = order[depth];
        auto [u, v] = edges[e];
        int cmax = (depth == 0) ? 1 : r; // first edge's color fixed
        for (int c = 1; c <= cmax; ++c) {
            classes[c].add_edge(u, v);
            coloring.set_color(e, c);
            bool mono = false;
            for (const Graph& t : targets) {
                if (find_subgraph_through_edge(classes[c], t, u, v)) { mono = true; break; }
            }
            bool done = !mono && self(self, depth + 1);
            if (!done) {
                classes[c].remove_edge(u, v);
                coloring.set_color(e, 0);
            }
            if (done) return true;
            if (exhausted) return false;
        }
        return false;
    };

    if (rec(rec, 0)) return {Verdict::Refuted, coloring, std::nullopt, stats};
    if (exhausted) return {Verdict::BudgetExhausted, std::nullopt, std::nullopt, stats};
    return {Verdict::Proved, std::nullopt, std::nullopt, stats};
}

} // namespace

std::optional<VertexMap> contains_mono_copy(const EdgeColoring& coloring, const Graph& h, int color) {
    return find_subgraph(coloring.color_class(color), h);
}

SearchOutcome arrows(const Graph& g, const Graph& h, int r, std::int64_t budget) {
    if (r < 1) throw std::invalid_argument("arrows: r must be >= 1");
    if (h.vertex_count() == 0) throw std::invalid_argument("arrows: empty pattern");
    return coloring_dfs(g, {h}, r, budget);
}

SearchOutcome hom_arrows(const Graph& g, const Graph& h, int r, std::int64_t budget) {
    if (r < 1) throw std::invalid_argument("hom_arrows: r must be >= 1");
    if (h.vertex_count() == 0) throw std::invalid_argument("hom_arrows: empty pattern");
    return coloring_dfs(g, minimal_hom_images(h), r, budget);
}

SearchOutcome is_ramsey_minimal(const Graph& g, const Graph& h, int r, std::int64_t budget) {
    SearchOutcome base = arrows(g, h, r, budget);
    if (base.verdict != Verdict::Proved) return base;

    SearchStats stats = base.stats;
    for (auto [u, v] : g.edges()) {
        SearchOutcome sub = arrows(g.without_edge(u, v), h, r, budget);
        stats.nodes += sub.stats.nodes;
        if (sub.verdict == Verdict::BudgetExhausted)
            return {Verdict::BudgetExhausted, std::nullopt, std::nullopt, stats};
        if (sub.verdict == Verdict::Proved)
            return {Verdict::Refuted, std::nullopt, std::nullopt, stats};
    }
    // Vertex deletions are subgraphs of edge deletions, but the definition
    // quantifies over all proper subgraphs, so they are checked as well.
    for (int v = 0; v < g.vertex_count(); ++v) {
        SearchOutcome sub = arrows(g.without_vertex(v), h, r, budget);
        stats.nodes += sub.stats.nodes;
        if (sub.verdict == Verdict::BudgetExhausted)
            return {Verdict::BudgetExhausted, std::nullopt, std::nullopt, stats};
        if (sub.verdict == Verdict::Proved)
            return {Verdict::Refuted, std::nullopt, std::nullopt, stats};
    }
    return {Verdict::Proved, std::nullopt, std::nullopt, stats};
}

bool coloring_avoids_mono(const EdgeColoring& coloring, const Graph& h, bool hom_mode) {
    std::vector<Graph> targets = hom_mode ? minimal_hom_images(h) : std::vector<Graph>{h};
    for (int c = 1; c <= coloring.color_count(); ++c) {
        Graph cls = coloring.color_class(c);
        for (const Graph& t : targets)
            if (find_subgraph(cls, t)) return false;
    }
    return true;
}

} // namespace br
