#include "br/subgraph.hpp"

#include <algorithm>
#include <set>

namespace br {

namespace {

// Pattern vertex order: start from a max-degree vertex, then repeatedly take
// the vertex with the most placed neighbors (ties by degree, then index).
std::vector<int> pattern_order(const Graph& pattern) {
    int k = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order)
                if (pattern.has_edge(u, v)) ++conn;
            int deg = pattern.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> image;   // by pattern vertex, -1 = unset
    Bitset used;

    Matcher(const Graph& h, const Graph& p)
        : host(h), pattern(p), order(pattern_order(p)),
          image(p.vertex_count(), -1), used(h.vertex_count()) {}

    bool candidates_at(int depth, Bitset& cand) const {
        int pv = order[depth];
        cand = Bitset(host.vertex_count());
        cand.set_all();
        for (int u = 0; u < pattern.vertex_count(); ++u)
            if (image[u] != -1 && pattern.has_edge(u, pv)) cand &= host.neighbors(image[u]);
        cand -= used;
        return cand.any();
    }

    template <typename Sink>
    bool search(int depth, Sink&& sink) {
        if (depth == pattern.vertex_count()) return sink(image);
        int pv = order[depth];
        Bitset cand;
        candidates_at(depth, cand);
        bool stop = false;
        cand.for_each([&](int v) {
            if (stop) return;
            if (host.degree(v) < pattern.degree(pv)) return;
            image[pv] = v;
            used.set(v);
            stop = search(depth + 1, sink);
            used.reset(v);
            image[pv] = -1;
        });
        return stop;
    }
};

VertexMap to_map(const std::vector<int>& image) {
    VertexMap m;
    m.pattern_n = static_cast<int>(image.size());
    m.t = 1;
    m.host = image;
    return m;
}

} // namespace

std::optional<VertexMap> find_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    Matcher m(host, pattern);
    std::optional<VertexMap> result;
    m.search(0, [&](const std::vector<int>& image) {
        result = to_map(image);
        return true;
    });
    return result;
}

std::optional<VertexMap> find_subgraph_through_edge(const Graph& host, const Graph& pattern,
                                                    int u, int v) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (!host.has_edge(u, v)) return std::nullopt;
    for (auto [a, b] : pattern.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int iu = flip ? b : a, iv = flip ? a : b;
            Matcher m(host, pattern);
            m.image[iu] = u;
            m.image[iv] = v;
            m.used.set(u);
            m.used.set(v);
            // Re-anchor the order so the preset vertices come first.
            std::vector<int> order{iu, iv};
            for (int x : m.order)
                if (x != iu && x != iv) order.push_back(x);
            m.order = std::move(order);
            std::optional<VertexMap> result;
            m.search(2, [&](const std::vector<int>& image) {
                result = to_map(image);
                return true;
            });
            if (result) return result;
        }
    }
    return std::nullopt;
}

std::vector<VertexMap> enumerate_copies(const Graph& host, const Graph& pattern) {
    std::vector<VertexMap> out;
    if (pattern.vertex_count() > host.vertex_count()) return out;
    // Copies keyed by (image vertex set, image edge set).
    std::set<std::pair<std::set<int>, std::set<std::pair<int, int>>>> seen;
    Matcher m(host, pattern);
    m.search(0, [&](const std::vector<int>& image) {
        std::set<int> vertex_set(image.begin(), image.end());
        std::set<std::pair<int, int>> edge_set;
        for (auto [a, b] : pattern.edges()) {
            int x = image[a], y = image[b];
            edge_set.emplace(std::min(x, y), std::max(x, y));
        }
        if (seen.insert({std::move(vertex_set), std::move(edge_set)}).second)
            out.push_back(to_map(image));
        return false;
    });
    return out;
}

std::int64_t count_labeled_copies(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    std::int64_t count = 0;
    Matcher m(host, pattern);
    m.search(0, [&](const std::vector<int>&) {
        ++count;
        return false;
    });
    return count;
}

} // namespace br
