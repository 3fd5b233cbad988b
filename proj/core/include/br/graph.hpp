#pragma once

#include "br/bitset.hpp"
#include "br/rng.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace br {

// Undirected simple graph on dense 0-based vertices with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int vertex_count() const { return n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    int edge_count() const;
    // Edge list sorted by (u, v) with u < v; edge ids throughout the toolkit
    // refer to positions in this list.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;   // remaining vertices renumbered

    // Canonical code of the upper adjacency triangle, minimized over all
    // degree-respecting relabelings. Requires n <= 11 (triangle fits a word).
    std::uint64_t canonical_code() const;
    bool isomorphic_to(const Graph& o) const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Standard small-graph builders used as test patterns and corpus seeds.
Graph complete_graph(int n);
Graph path_graph(int n);       // n vertices, n-1 edges
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}; vertex 0 is the center
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
Graph gnp(int n, double p, Rng& rng);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// All graphs on exactly n vertices up to isomorphism (n <= 9), by one-vertex
// augmentation with canonical-code dedup.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

} // namespace br
