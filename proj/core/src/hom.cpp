#include "br/hom.hpp"
#include "br/subgraph.hpp"

#include <map>
#include <stdexcept>

namespace br {

Graph identify_vertices(const Graph& g, int u, int v) {
    if (g.has_edge(u, v)) throw std::invalid_argument("identify_vertices: adjacent pair");
    if (u == v) throw std::invalid_argument("identify_vertices: same vertex");
    if (u > v) std::swap(u, v);
    int n = g.vertex_count();
    Graph h(n - 1);
    auto remap = [&](int x) { return x == v ? u : x - (x > v); };
    for (auto [a, b] : g.edges()) {
        int x = remap(a), y = remap(b);
        if (x != y && !h.has_edge(x, y)) h.add_edge(x, y);
    }
    return h;
}

std::vector<Graph> hom_images(const Graph& h, int vertex_bound) {
    if (h.vertex_count() > vertex_bound)
        throw std::invalid_argument("hom_images: vertex bound exceeded");
    // Key on (vertex count, code): codes alone can collide across sizes.
    std::map<std::pair<int, std::uint64_t>, Graph> closure;
    std::vector<Graph> frontier{h};
    closure.emplace(std::make_pair(h.vertex_count(), h.canonical_code()), h);
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            int n = g.vertex_count();
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph img = identify_vertices(g, u, v);
                    auto key = std::make_pair(img.vertex_count(), img.canonical_code());
                    auto [it, inserted] = closure.emplace(key, img);
                    if (inserted) next.push_back(it->second);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(closure.size());
    for (auto& [code, g] : closure) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> minimal_hom_images(const Graph& h, int vertex_bound) {
    auto images = hom_images(h, vertex_bound);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool has_smaller = false;
        for (std::size_t j = 0; j < images.size() && !has_smaller; ++j) {
            if (i == j) continue;
            // A strictly smaller image inside images[i] fires first in any
            // monochromatic check, so images[i] is redundant.
            if (images[j].edge_count() < images[i].edge_count() &&
                find_subgraph(images[i], images[j]))
                has_smaller = true;
        }
        if (!has_smaller) out.push_back(images[i]);
    }
    return out;
}

} // namespace br
