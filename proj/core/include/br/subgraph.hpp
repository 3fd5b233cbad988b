#pragma once

#include "br/graph.hpp"
#include "br/partite.hpp"

#include <cstdint>
#include <optional>

namespace br {

// Injective subgraph embedding (not induced) of `pattern` into `host`:
// bitset backtracking with pattern vertices ordered by degree and
// connectivity to the placed prefix.
std::optional<VertexMap> find_subgraph(const Graph& host, const Graph& pattern);

// As above, but the image must use the host edge {u, v} (both orientations of
// every pattern edge are tried against it). Inner loop of the coloring DFS.
std::optional<VertexMap> find_subgraph_through_edge(const Graph& host, const Graph& pattern,
                                                    int u, int v);

// All copies of `pattern` in `host` as distinct subgraphs (deduplicated over
// automorphisms of the pattern); each copy is one representative labeling.
std::vector<VertexMap> enumerate_copies(const Graph& host, const Graph& pattern);

// Ordered (labeled) embedding count; enumerate_copies().size() times |Aut(H)|.
std::int64_t count_labeled_copies(const Graph& host, const Graph& pattern);

} // namespace br
