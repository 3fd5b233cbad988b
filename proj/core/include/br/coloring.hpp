#pragma once

#include "br/graph.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace br {

// r-edge-coloring of a host graph. Edge ids index the host's sorted edge
// list; colors are 1..r, with 0 reserved for "undecided" during search.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(const Graph& host, int r)
        : n_(host.vertex_count()), r_(r), edges_(host.edges()),
          color_(edges_.size(), 0), index_(static_cast<std::size_t>(n_) * n_, -1) {
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            index_[static_cast<std::size_t>(u) * n_ + v] = e;
            index_[static_cast<std::size_t>(v) * n_ + u] = e;
        }
    }

    int vertex_count() const { return n_; }
    int color_count() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int edge_index(int u, int v) const {
        int e = index_[static_cast<std::size_t>(u) * n_ + v];
        if (e < 0) throw std::invalid_argument("EdgeColoring: not an edge");
        return e;
    }

    int color_of_edge(int e) const { return color_[e]; }
    int color_of(int u, int v) const { return color_[edge_index(u, v)]; }
    void set_color(int e, int c) { color_[e] = c; }

    const std::vector<int>& colors() const { return color_; }
    void set_colors(std::vector<int> c) {
        if (c.size() != color_.size()) throw std::invalid_argument("EdgeColoring: size mismatch");
        color_ = std::move(c);
    }

    bool complete() const {
        for (int c : color_) if (c < 1 || c > r_) return false;
        return true;
    }

    Graph color_class(int c) const {
        Graph g(n_);
        for (int e = 0; e < edge_count(); ++e)
            if (color_[e] == c) g.add_edge(edges_[e].first, edges_[e].second);
        return g;
    }

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> color_;
    std::vector<int> index_;
};

} // namespace br
