#include "br/robustness.hpp"
#include "br/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace br {

namespace {

// Automorphism count of a small pattern (|Aut(H)|), by brute force.
std::int64_t automorphism_count(const Graph& h) {
    return count_labeled_copies(h, h);
}

} // namespace

RobustnessReport robustness_exact(const Graph& g, const Graph& h, int r, std::int64_t budget,
                                  bool labeled_copies) {
    if (r < 1) throw std::invalid_argument("robustness_exact: r must be >= 1");
    auto copies = enumerate_copies(g, h);
    auto g_edges = g.edges();
    int m = static_cast<int>(g_edges.size());

    RobustnessReport report;
    report.total_copies = static_cast<std::int64_t>(copies.size());
    report.lemma_bound = Fraction(h.edge_count(), static_cast<std::int64_t>(r) * g.edge_count());
    report.argmin_coloring = EdgeColoring(g, r);

    if (copies.empty()) {
        report.beta = Fraction(0, 1);
        return report;
    }

    // Edge-id lists per copy, and copy lists per edge for incremental checks.
    EdgeColoring coloring(g, r);
    std::vector<std::vector<int>> copy_edges(copies.size());
    std::vector<std::vector<int>> edge_copies(m);
    for (std::size_t ci = 0; ci < copies.size(); ++ci) {
        for (auto [a, b] : h.edges()) {
            int e = coloring.edge_index(copies[ci].host[a], copies[ci].host[b]);
            copy_edges[ci].push_back(e);
            edge_copies[e].push_back(static_cast<int>(ci));
        }
    }

    std::int64_t best = report.total_copies + 1;
    std::vector<int> best_colors;
    std::int64_t nodes = 0;
    bool exhausted = false;

    // mono_now = copies fully colored and monochromatic; a lower bound on the
    // final count, so branches at or above the incumbent die.
    auto rec = [&](auto&& self, int depth, std::int64_t mono_now) -> void {
        if (mono_now >= best) return;
        if (depth == m) {
            best = mono_now;
            best_colors = coloring.colors();
            return;
        }
        if (++nodes > budget) { exhausted = true; return; }
        int cmax = (depth == 0) ? 1 : r;
        for (int c = 1; c <= cmax && !exhausted; ++c) {
            coloring.set_color(depth, c);
            std::int64_t add = 0;
            for (int ci : edge_copies[depth]) {
                bool mono = true;
                for (int e : copy_edges[ci])
                    if (coloring.color_of_edge(e) != c) { mono = false; break; }
                if (mono) ++add;
            }
            self(self, depth + 1, mono_now + add);
            coloring.set_color(depth, 0);
        }
    };
    rec(rec, 0, 0);

    report.nodes = nodes;
    report.exact = !exhausted;
    report.mono_count = (best <= report.total_copies) ? best : report.total_copies;
    if (!best_colors.empty()) report.argmin_coloring.set_colors(best_colors);
    std::int64_t scale = labeled_copies ? automorphism_count(h) : 1;
    report.mono_count *= scale;
    report.total_copies *= scale;
    report.beta = Fraction(report.mono_count, report.total_copies);
    return report;
}

WitnessColoring lemma_witness_coloring(const Graph& g, const Graph& h, int r, std::int64_t budget) {
    SearchOutcome minimal = is_ramsey_minimal(g, h, r, budget);
    if (minimal.verdict != Verdict::Proved)
        throw std::invalid_argument("lemma_witness_coloring: G is not Ramsey-minimal for H");

    auto copies = enumerate_copies(g, h);
    EdgeColoring tmp(g, r);
    int m = tmp.edge_count();
    std::vector<int> membership(m, 0);
    for (const auto& copy : copies)
        for (auto [a, b] : h.edges())
            ++membership[tmp.edge_index(copy.host[a], copy.host[b])];

    int pivot = 0;
    for (int e = 1; e < m; ++e)
        if (membership[e] < membership[pivot]) pivot = e; // ties: lowest edge id

    auto [pu, pv] = tmp.edges()[pivot];
    SearchOutcome sub = arrows(g.without_edge(pu, pv), h, r, budget);
    if (sub.verdict != Verdict::Refuted)
        throw std::runtime_error("lemma_witness_coloring: minimality re-check failed on G - e");

    // Lift the mono-free coloring of G - e back to G's edge ids.
    WitnessColoring out{EdgeColoring(g, r), Fraction(0, 1), pu, pv};
    const EdgeColoring& partial = *sub.coloring;
    for (auto [u, v] : partial.edges())
        out.coloring.set_color(out.coloring.edge_index(u, v), partial.color_of(u, v));

    // Color the pivot edge to close the fewest monochromatic copies.
    std::int64_t best_mono = -1;
    int best_color = 1;
    for (int c = 1; c <= r; ++c) {
        out.coloring.set_color(pivot, c);
        std::int64_t mono = 0;
        for (const auto& copy : copies) {
            bool all_c = true;
            for (auto [a, b] : h.edges())
                if (out.coloring.color_of(copy.host[a], copy.host[b]) != c) { all_c = false; break; }
            if (all_c) ++mono;
        }
        if (best_mono < 0 || mono < best_mono) {
            best_mono = mono;
            best_color = c;
        }
    }
    out.coloring.set_color(pivot, best_color);
    out.achieved = Fraction(best_mono, static_cast<std::int64_t>(copies.size()));
    return out;
}

MinimalFamilyScan minimal_family_scan(const Graph& h, int r, int vertex_bound,
                                      std::int64_t budget) {
    if (vertex_bound > 9) throw std::invalid_argument("minimal_family_scan: vertex bound > 9");
    MinimalFamilyScan scan;
    for (int n = 1; n <= vertex_bound; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            ++scan.graphs_scanned;
            SearchOutcome res = is_ramsey_minimal(g, h, r, budget);
            if (res.verdict == Verdict::BudgetExhausted) {
                scan.complete = false;
                continue;
            }
            if (res.verdict == Verdict::Proved) scan.minimal.push_back(g);
        }
    }
    return scan;
}

} // namespace br
