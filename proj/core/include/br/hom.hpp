#pragma once

#include "br/graph.hpp"

#include <vector>

namespace br {

// Closure of H under single identifications of non-adjacent vertex pairs,
// including H itself, deduplicated up to isomorphism. Exponential; callers
// must respect the vertex bound (default 8).
std::vector<Graph> hom_images(const Graph& h, int vertex_bound = 8);

// The images none of whose proper fellows embed into them; checking only
// these suffices when testing "contains some monochromatic hom image".
std::vector<Graph> minimal_hom_images(const Graph& h, int vertex_bound = 8);

// Identify non-adjacent u and v (u kept, v removed, neighborhoods merged).
Graph identify_vertices(const Graph& g, int u, int v);

} // namespace br
