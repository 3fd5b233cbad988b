#pragma once

#include "br/graph.hpp"
#include "br/partite.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace br {

// Inputs to the greedy blowup extraction. Densities are indexed by original
// pattern vertices (symmetric matrix, only pattern-edge entries used); empty
// means "measure from the host". An empty order means "choose automatically".
struct EmbedderParams {
    double alpha = 0.05;
    std::vector<int> order;
    std::vector<std::vector<double>> densities;
};

struct StageReport {
    int i = 0;                 // prefix size after this stage
    double q = 1;              // product of densities from the prefix into vertex i
    std::int64_t target_t = 0; // recursion target (floored)
    int achieved_t = 0;
    double good_fraction = 1;  // stage 1 only; fraction of good vertices
};

struct EmbedderResult {
    VertexMap certificate;       // original pattern labeling; empty when t = 0
    int achieved_t = 0;
    std::vector<StageReport> stages;
    std::vector<int> order;
    double epsilon = 0, delta = 0, p12 = 0;
    double target_formula_t = 0; // (prod p_ij \ first pair - alpha) log n / log(1/p12)
    bool used_exact_fallback = false;
};

// Orders V(H) so the first two vertices span a minimum-density edge (density
// capped at 1/2 for the rate computation), then greedily keeps each prefix's
// incoming density product large. Deterministic ties by lowest index.
std::vector<int> choose_vertex_order(const Graph& h, const std::vector<std::vector<double>>& densities);

// Goodness of a canonical prefix copy: for every pattern position j beyond
// the prefix, the common-neighborhood extension set into W_j has size at
// least prod_{l in N_i(j)} (p_lj - eps) * |W_j|. Everything here is in
// order-position indexing: w[a] lives in the part of order[a].
bool is_good_copy(const PartiteGraph& gamma, const Graph& h, const std::vector<int>& order,
                  const std::vector<std::vector<double>>& p, double eps,
                  const std::vector<int>& prefix_copy);

// Explicit bipartite graph for the biclique step.
struct Bipartite {
    int left = 0, right = 0;
    std::vector<Bitset> adj; // adj[l] over right indices

    Bipartite(int l, int r) : left(l), right(r), adj(l, Bitset(r)) {}
    void add(int l, int r) { adj[l].set(r); }
};

// Balanced biclique K_{t,t}: exact branch and bound when both sides have at
// most `exact_bound` vertices, otherwise greedy selection over
// degree-ordered vertices (absence then proves nothing).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
kst_biclique(const Bipartite& b, int t, int exact_bound = 24);

// Largest t for which kst_biclique succeeds, with its witness.
struct BicliqueResult {
    int t = 0;
    std::vector<int> left, right;
};
BicliqueResult max_balanced_biclique(const Bipartite& b, int exact_bound = 24);

// The full induction: good-vertex filtering, biclique step for the first
// pair, then good-extension biclique steps for every later pattern vertex.
// Certificates always verify; a collapsed stage yields the best prefix and
// achieved_t = 0 unless the small-instance exact fallback recovers t = 1.
EmbedderResult find_blowup_greedy(const PartiteGraph& gamma, const Graph& h,
                                  const EmbedderParams& params = {});

} // namespace br
