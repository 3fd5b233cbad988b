#pragma once

#include "br/arrow.hpp"
#include "br/coloring.hpp"
#include "br/fraction.hpp"
#include "br/graph.hpp"

#include <cstdint>
#include <vector>

namespace br {

struct RobustnessReport {
    Fraction beta{0, 1};          // min mono copies / total copies
    EdgeColoring argmin_coloring;
    std::int64_t mono_count = 0;
    std::int64_t total_copies = 0;
    Fraction lemma_bound{0, 1};   // e(H) / (r * e(G))
    bool exact = true;            // false when the budget cut the search short
    std::int64_t nodes = 0;
};

// Exact minimum monochromatic-copy fraction over all r-colorings of G,
// branch-and-bound over edge colors. Copies are counted as distinct
// subgraphs; the labeled count scales both sides by |Aut(H)| and is exposed
// via the flag.
RobustnessReport robustness_exact(const Graph& g, const Graph& h, int r,
                                  std::int64_t budget = kDefaultBudget,
                                  bool labeled_copies = false);

struct WitnessColoring {
    EdgeColoring coloring;
    Fraction achieved{0, 1};
    int pivot_edge_u = -1, pivot_edge_v = -1;
};

// The constructive coloring behind the e(H)/(r e(G)) bound: color G - e
// mono-free (possible by minimality), then give the copy-poorest edge e the
// color through which it closes fewest monochromatic copies.
WitnessColoring lemma_witness_coloring(const Graph& g, const Graph& h, int r,
                                       std::int64_t budget = kDefaultBudget);

struct MinimalFamilyScan {
    std::vector<Graph> minimal;  // connected Ramsey-minimal graphs found
    bool complete = true;        // false when some decision hit the budget
    int graphs_scanned = 0;
};

// Scan all connected graphs on <= vertex_bound vertices (up to isomorphism)
// for Ramsey minimality. Isolated vertices never occur in minimal graphs, so
// connectivity loses nothing for connected H.
MinimalFamilyScan minimal_family_scan(const Graph& h, int r, int vertex_bound,
                                      std::int64_t budget = kDefaultBudget);

} // namespace br
