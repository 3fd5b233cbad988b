#include "br/blowup_number.hpp"
#include "br/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace br {

namespace {

// Canonical H[t] search where part p of the host is the range
// [p*n, (p+1)*n). Same slot backtracking as find_canonical_blowup, without
// the PartiteGraph scaffolding; this is the inner loop of the coloring DFS.
std::optional<VertexMap> blowup_in_ranges(const Graph& host, int n, const Graph& h,
                                          const std::vector<int>& part_for_pattern, int t) {
    int k = h.vertex_count();
    if (t > n) return std::nullopt;
    VertexMap map;
    map.pattern_n = k;
    map.t = t;
    map.host.assign(static_cast<std::size_t>(k) * t, -1);

    auto rec = [&](auto&& self, int slot) -> bool {
        if (slot == k * t) return true;
        int i = slot / t, c = slot % t;
        int base = part_for_pattern[i] * n;
        Bitset cand(host.vertex_count());
        for (int v = base; v < base + n; ++v) cand.set(v);
        for (int j = 0; j < i; ++j)
            if (h.has_edge(i, j))
                for (int d = 0; d < t; ++d) cand &= host.neighbors(map.at(j, d));
        int lower = (c > 0) ? map.at(i, c - 1) : base - 1;
        for (int v = cand.find_next(lower + 1); v != -1; v = cand.find_next(v + 1)) {
            map.at(i, c) = v;
            if (self(self, slot + 1)) return true;
        }
        map.at(i, c) = -1;
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

} // namespace

CopyCache make_copy_cache(const Graph& g, const Graph& h) {
    return {enumerate_copies(g, h), h};
}

std::optional<MonoBlowup> has_mono_canonical_blowup(const EdgeColoring& coloring, const Graph& g,
                                                    const Graph& h, int t, int n,
                                                    const CopyCache* cache) {
    CopyCache local;
    if (!cache) {
        local = make_copy_cache(g, h);
        cache = &local;
    }
    for (int c = 1; c <= coloring.color_count(); ++c) {
        Graph cls = coloring.color_class(c);
        for (const auto& copy : cache->copies)
            if (auto map = blowup_in_ranges(cls, n, h, copy.host, t)) return MonoBlowup{c, *map};
    }
    return std::nullopt;
}

namespace {

struct BlowupDfs {
    const Graph& g;
    const Graph& h;
    int r, t, n;
    const CopyCache& cache;
    std::int64_t& nodes;
    std::int64_t budget;

    PartiteGraph gamma;
    EdgeColoring coloring;
    std::vector<Graph> classes;
    std::vector<std::vector<int>> copies_of_pair; // by packed G-edge, copy indices
    bool exhausted = false;

    // Non-canonical mode: look for any copy of this pattern instead.
    const Graph* any_pattern = nullptr;

    BlowupDfs(const Graph& g_, const Graph& h_, int r_, int t_, int n_, const CopyCache& cache_,
              std::int64_t& nodes_, std::int64_t budget_)
        : g(g_), h(h_), r(r_), t(t_), n(n_), cache(cache_), nodes(nodes_), budget(budget_),
          gamma(blowup(g_, n_)), coloring(gamma.g, r_),
          classes(r_ + 1, Graph(gamma.g.vertex_count())) {
        int m = g.vertex_count();
        copies_of_pair.assign(static_cast<std::size_t>(m) * m, {});
        for (std::size_t ci = 0; ci < cache.copies.size(); ++ci) {
            for (auto [a, b] : h.edges()) {
                int u = cache.copies[ci].host[a], v = cache.copies[ci].host[b];
                copies_of_pair[static_cast<std::size_t>(u) * m + v].push_back(static_cast<int>(ci));
                copies_of_pair[static_cast<std::size_t>(v) * m + u].push_back(static_cast<int>(ci));
            }
        }
    }

    bool creates_mono(int c, int x, int y) {
        if (any_pattern)
            return find_subgraph_through_edge(classes[c], *any_pattern, x, y).has_value();
        int pu = x / n, pv = y / n;
        for (int ci : copies_of_pair[static_cast<std::size_t>(pu) * g.vertex_count() + pv])
            if (blowup_in_ranges(classes[c], n, h, cache.copies[ci].host, t)) return true;
        return false;
    }

    // True iff a coloring with no monochromatic target exists (left in
    // `coloring` on success).
    bool find_bad_coloring() {
        auto edges = coloring.edges();
        int m = static_cast<int>(edges.size());
        auto rec = [&](auto&& self, int depth) -> bool {
            if (depth == m) return true;
            if (++nodes > budget) { exhausted = true; return false; }
            auto [x, y] = edges[depth];
            int cmax = (depth == 0) ? 1 : r;
            for (int c = 1; c <= cmax; ++c) {
                classes[c].add_edge(x, y);
                coloring.set_color(depth, c);
                bool done = !creates_mono(c, x, y) && self(self, depth + 1);
                if (done) return true;
                classes[c].remove_edge(x, y);
                coloring.set_color(depth, 0);
                if (exhausted) return false;
            }
            return false;
        };
        return rec(rec, 0);
    }
};

BlowupNumberResult scan_levels(const Graph& g, const Graph& h, int r, int t, int n_max,
                               std::int64_t budget, const Graph* any_pattern) {
    CopyCache cache = make_copy_cache(g, h);
    BlowupNumberResult result{Verdict::Refuted, std::nullopt, std::nullopt, 0};
    for (int n = std::max(t, 1); n <= n_max; ++n) {
        BlowupDfs dfs(g, h, r, t, n, cache, result.nodes, budget);
        dfs.any_pattern = any_pattern;
        bool bad = dfs.find_bad_coloring();
        if (dfs.exhausted) {
            result.verdict = Verdict::BudgetExhausted;
            return result;
        }
        if (!bad) {
            result.verdict = Verdict::Proved;
            result.value = n;
            return result;
        }
        result.best_lower = BoundCertificate{BoundKind::Lower, n, dfs.coloring};
    }
    return result; // refuted up to n_max; best_lower is the strongest witness
}

} // namespace

BlowupNumberResult blowup_ramsey_exact(const Graph& g, const Graph& h, int r, int t, int n_max,
                                       std::int64_t budget) {
    if (t < 1) throw std::invalid_argument("blowup_ramsey_exact: t must be >= 1");
    SearchOutcome pre = arrows(g, h, r, budget);
    if (pre.verdict == Verdict::Refuted)
        throw std::invalid_argument("blowup_ramsey_exact: G does not arrow H, B is infinite");
    if (pre.verdict == Verdict::BudgetExhausted)
        return {Verdict::BudgetExhausted, std::nullopt, std::nullopt, pre.stats.nodes};
    auto result = scan_levels(g, h, r, t, n_max, budget, nullptr);
    result.nodes += pre.stats.nodes;
    return result;
}

BlowupNumberResult blowup_ramsey_noncanonical(const Graph& g, const Graph& h, int r, int t,
                                              int n_max, std::int64_t budget) {
    if (t < 1) throw std::invalid_argument("blowup_ramsey_noncanonical: t must be >= 1");
    SearchOutcome pre = hom_arrows(g, h, r, budget);
    if (pre.verdict == Verdict::Refuted)
        throw std::invalid_argument("blowup_ramsey_noncanonical: G does not hom-arrow H, B' is infinite");
    if (pre.verdict == Verdict::BudgetExhausted)
        return {Verdict::BudgetExhausted, std::nullopt, std::nullopt, pre.stats.nodes};
    Graph pattern = blowup(h, t).g;
    auto result = scan_levels(g, h, r, t, n_max, budget, &pattern);
    result.nodes += pre.stats.nodes;
    return result;
}

std::optional<BoundCertificate> lower_bound_search(const Graph& g, const Graph& h, int r, int t,
                                                   int n, LowerBoundStrategy strategy,
                                                   std::int64_t budget, std::uint64_t seed) {
    PartiteGraph gamma = blowup(g, n);
    EdgeColoring coloring(gamma.g, r);
    int m = coloring.edge_count();
    if (n < t) {
        // Parts of size n cannot host t vertices; any complete coloring works.
        for (int e = 0; e < m; ++e) coloring.set_color(e, 1);
        return BoundCertificate{BoundKind::Lower, n, coloring};
    }

    CopyCache cache = make_copy_cache(g, h);
    Rng rng(seed);

    auto randomize = [&] {
        for (int e = 0; e < m; ++e) coloring.set_color(e, 1 + rng.below_int(r));
    };

    struct Conflict {
        int copy;
        int color;
        VertexMap map;
    };
    auto find_conflicts = [&]() {
        std::vector<Conflict> out;
        for (int c = 1; c <= r; ++c) {
            Graph cls = coloring.color_class(c);
            for (std::size_t ci = 0; ci < cache.copies.size(); ++ci)
                if (auto map = blowup_in_ranges(cls, n, h, cache.copies[ci].host, t))
                    out.push_back({static_cast<int>(ci), c, *map});
        }
        return out;
    };

    if (strategy == LowerBoundStrategy::Random) {
        for (std::int64_t sample = 0; sample < budget; ++sample) {
            randomize();
            if (find_conflicts().empty()) return BoundCertificate{BoundKind::Lower, n, coloring};
        }
        return std::nullopt;
    }

    // Min-conflict local search. The move recolors the blowup-edge bundle
    // (pair of parts within the copy) participating in the most conflicts;
    // full restart every 10^4 moves.
    constexpr std::int64_t kRestartPeriod = 10'000;
    randomize();
    for (std::int64_t move = 0; move < budget; ++move) {
        if (move % kRestartPeriod == 0 && move > 0) randomize();
        auto conflicts = find_conflicts();
        if (conflicts.empty()) return BoundCertificate{BoundKind::Lower, n, coloring};

        int gm = g.vertex_count();
        std::vector<int> bundle_hits(static_cast<std::size_t>(gm) * gm, 0);
        for (const auto& conf : conflicts) {
            const auto& copy = cache.copies[conf.copy];
            for (auto [a, b] : h.edges()) {
                int u = std::min(copy.host[a], copy.host[b]);
                int v = std::max(copy.host[a], copy.host[b]);
                ++bundle_hits[static_cast<std::size_t>(u) * gm + v];
            }
        }
        int best_u = -1, best_v = -1, best_hits = 0;
        for (int u = 0; u < gm; ++u)
            for (int v = u + 1; v < gm; ++v)
                if (bundle_hits[static_cast<std::size_t>(u) * gm + v] > best_hits) {
                    best_hits = bundle_hits[static_cast<std::size_t>(u) * gm + v];
                    best_u = u;
                    best_v = v;
                }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int e = coloring.edge_index(best_u * n + a, best_v * n + b);
                coloring.set_color(e, 1 + rng.below_int(r));
            }
    }
    return std::nullopt;
}

bool verify_lower_certificate(const BoundCertificate& cert, const Graph& g, const Graph& h,
                              int r, int t) {
    if (cert.kind != BoundKind::Lower || !cert.witness) return false;
    const EdgeColoring& coloring = *cert.witness;
    if (coloring.color_count() != r) return false;
    PartiteGraph gamma = blowup(g, cert.n);
    if (coloring.vertex_count() != gamma.g.vertex_count() || coloring.edges() != gamma.g.edges())
        return false;
    if (!coloring.complete()) return false;
    return !has_mono_canonical_blowup(coloring, g, h, t, cert.n).has_value();
}

} // namespace br
