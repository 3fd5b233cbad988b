#pragma once

#include "br/coloring.hpp"
#include "br/embedder.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace br {

// Derived parameter block for the dense-graph-to-blowup pipeline; everything
// is recomputed from (eta, k, eH), never stored stale.
struct NikiforovParams {
    double eta = 0;
    int k = 0;
    int edge_count = 0;

    double lambda() const;       // eta^(1-1/eH) / (5 log(1/eta))
    double epsilon_dlr() const;  // eta^(2k^2) / (8k^2)
    double alpha() const;        // eta^(k^2)
};

// Exponential-constant calculators. b lives in log space; gamma outside
// (0, 1/r) raises the warning flag rather than an error, since the theorem
// only requires "sufficiently small".
struct SouzaB {
    double log_value = 0; // natural log of b
    double value = 0;     // exp(log_value), +inf on overflow
    bool gamma_warning = false;
};

double lambda_reference(double eta, int edge_count);
SouzaB souza_b_reference(int r, int edge_count, double gamma);

struct DenseBlowupReport {
    bool refused = false;            // labeled-copy density below eta
    double measured_density = 0;     // labeled copies / n^k
    std::int64_t labeled_copies = 0;
    EmbedderResult embedding;        // certificate in H's labeling over G's vertices
    PartiteGraph parts;              // the selected k-partition
    double lambda_log_n = 0;         // reference rate, reported not asserted
    double density_product = 0;      // P = prod p_ij over pattern edges
};

// Random equitable partition (best of `trials`), densest parts, vertex-order
// selection with the 1/2 cap, then the greedy embedder.
DenseBlowupReport find_blowup_in_dense(const Graph& g, const Graph& h, double eta, int trials,
                                       std::uint64_t seed);

struct PopularColorReduction {
    int color = 0;                   // the monochromatic color found in G
    VertexMap copy;                  // copy of H in G under the popular coloring
    std::vector<int> parts;          // G-vertices hosting the pattern, i.e. part ids of G[n]
    std::vector<double> pair_densities; // selected-color densities, one per pattern edge
    EdgeColoring popular;            // the auxiliary coloring of E(G)
};

// Popular-color reduction from a coloring of G[n] to a coloring of G; ties
// break to the lowest color index. Requires (and is guaranteed by) G -> H.
PopularColorReduction souza_reduction(const EdgeColoring& blowup_coloring, const Graph& g,
                                      const Graph& h, int r, int n);

struct DemoRow {
    int n = 0;
    int trial = 0;
    int t_achieved = 0;
    double t_reference = 0;
};

// Empirical n-vs-t curve: random colorings of G[n], popular-color reduction,
// then the embedder on the selected monochromatic cylinder.
std::vector<DemoRow> blowup_upper_bound_demo(const Graph& g, const Graph& h, int r,
                                             const std::vector<int>& n_grid, int trials,
                                             std::uint64_t seed);

} // namespace br
