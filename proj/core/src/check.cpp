#include "br/check.hpp"

#include <algorithm>
#include <set>

namespace br {

namespace {

// Naive injective subgraph test, vertex 0..k-1 in index order, no ordering
// heuristics and no bitsets on purpose.
bool naive_contains(const Graph& host, const Graph& h) {
    int k = h.vertex_count(), n = host.vertex_count();
    if (k > n) return false;
    std::vector<int> image(k, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool fits = true;
            for (int j = 0; j < i && fits; ++j)
                if (h.has_edge(i, j) && !host.has_edge(v, image[j])) fits = false;
            if (!fits) continue;
            image[i] = v;
            used[v] = true;
            if (self(self, i + 1)) return true;
            used[v] = false;
            image[i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

CheckResult check_embedding_certificate(const Graph& host, const std::vector<std::vector<int>>& parts,
                                        const Graph& h, const VertexMap& cert, int t) {
    int k = h.vertex_count();
    if (cert.pattern_n != k) return {false, "pattern size mismatch"};
    if (cert.t != t) return {false, "t mismatch"};
    if (static_cast<int>(cert.host.size()) != k * t) return {false, "entry count mismatch"};

    std::set<int> seen;
    for (int v : cert.host) {
        if (v < 0 || v >= host.vertex_count()) return {false, "host vertex out of range"};
        if (!seen.insert(v).second) return {false, "host vertex repeated"};
    }

    if (!parts.empty()) {
        if (static_cast<int>(parts.size()) != k) return {false, "part count mismatch"};
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < t; ++c) {
                int v = cert.at(i, c);
                if (std::find(parts[i].begin(), parts[i].end(), v) == parts[i].end())
                    return {false, "vertex outside its canonical part"};
            }
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!h.has_edge(i, j)) continue;
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b)
                    if (!host.has_edge(cert.at(i, a), cert.at(j, b)))
                        return {false, "missing blowup edge"};
        }
    return {true, ""};
}

CheckResult check_coloring_certificate(const EdgeColoring& coloring, const Graph& host,
                                       const Graph& h) {
    if (coloring.vertex_count() != host.vertex_count()) return {false, "vertex count mismatch"};
    if (coloring.edges() != host.edges()) return {false, "edge set mismatch"};
    if (!coloring.complete()) return {false, "coloring incomplete or out of range"};
    for (int c = 1; c <= coloring.color_count(); ++c) {
        Graph cls(host.vertex_count());
        for (int e = 0; e < coloring.edge_count(); ++e)
            if (coloring.color_of_edge(e) == c)
                cls.add_edge(coloring.edges()[e].first, coloring.edges()[e].second);
        if (naive_contains(cls, h))
            return {false, "monochromatic copy in color " + std::to_string(c)};
    }
    return {true, ""};
}

} // namespace br
