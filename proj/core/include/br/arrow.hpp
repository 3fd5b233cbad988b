#pragma once

#include "br/coloring.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"

#include <cstdint>
#include <optional>

namespace br {

enum class Verdict { Proved, Refuted, BudgetExhausted };

struct SearchStats {
    std::int64_t nodes = 0;
};

// Three-valued outcome shared by every search in the toolkit. A Refuted
// arrow claim carries the bad coloring; a Proved embedding claim carries the
// witness map.
struct SearchOutcome {
    Verdict verdict;
    std::optional<EdgeColoring> coloring;   // for refuted arrow claims
    std::optional<VertexMap> embedding;     // for proved embedding claims
    SearchStats stats;
};

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

// Monochromatic copy of H in the given color class, or absence.
std::optional<VertexMap> contains_mono_copy(const EdgeColoring& coloring, const Graph& h, int color);

// Does every r-coloring of E(G) contain a monochromatic copy of H?
// DFS over edges in BFS order from a max-degree vertex; first edge fixed to
// color 1; a branch dies as soon as the new edge completes a monochromatic H.
SearchOutcome arrows(const Graph& g, const Graph& h, int r, std::int64_t budget = kDefaultBudget);

// As arrows, but a branch dies when any homomorphic image of H appears
// monochromatically.
SearchOutcome hom_arrows(const Graph& g, const Graph& h, int r, std::int64_t budget = kDefaultBudget);

// Proved iff G arrows H but no single-edge-deleted or single-vertex-deleted
// proper subgraph does.
SearchOutcome is_ramsey_minimal(const Graph& g, const Graph& h, int r,
                                std::int64_t budget = kDefaultBudget);

// Re-check of a refuted-arrow certificate: no color class contains H (or any
// hom image, in hom mode).
bool coloring_avoids_mono(const EdgeColoring& coloring, const Graph& h, bool hom_mode = false);

} // namespace br
