#pragma once

#include "br/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace br {

// Graph plus an ordered partition of (a subset of) its vertices into labeled
// parts. Blowups and cylinder data live here.
struct PartiteGraph {
    Graph g;
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of; // -1 for vertices outside every part

    PartiteGraph() = default;
    PartiteGraph(Graph graph, std::vector<std::vector<int>> parts_);

    int part_count() const { return static_cast<int>(parts.size()); }
    Bitset part_bits(int i) const;
};

// Assignment of (pattern vertex, copy index) -> host vertex. With t = 1 this
// is a plain subgraph-embedding witness.
struct VertexMap {
    int pattern_n = 0;
    int t = 1;
    std::vector<int> host; // host[i * t + c]

    int at(int pattern_vertex, int copy_index) const { return host[pattern_vertex * t + copy_index]; }
    int& at(int pattern_vertex, int copy_index) { return host[pattern_vertex * t + copy_index]; }
};

// t-blowup of H: part i holds vertices [i*t, (i+1)*t), every H-edge becomes a
// complete bipartite graph between the corresponding parts.
PartiteGraph blowup(const Graph& h, int t);

// Ordered canonical copies of H across the parts selected by `injection`
// (pattern vertex i -> part injection[i]; identity when empty).
std::int64_t count_canonical_copies(const PartiteGraph& gamma, const Graph& h,
                                    const std::vector<int>& injection = {});

enum class BlowupStatus { Found, Refuted, BudgetExhausted };

struct BlowupSearchResult {
    BlowupStatus status;
    std::optional<VertexMap> certificate;
    std::int64_t nodes = 0;
};

// Exhaustive backtracking search for a canonical H[t] in Gamma, with bitset
// intersection pruning. Exact whenever every part has <= exact_part_bound
// vertices; beyond that a node budget applies and the search may give up.
BlowupSearchResult find_canonical_blowup(const PartiteGraph& gamma, const Graph& h, int t,
                                         const std::vector<int>& injection = {},
                                         int exact_part_bound = 12,
                                         std::int64_t budget = 200'000'000);

// Largest t for which a canonical H[t] exists (exact at small part sizes).
int max_canonical_blowup(const PartiteGraph& gamma, const Graph& h,
                         const std::vector<int>& injection = {});

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

class EdgeColoring; // br/coloring.hpp

// Checks injectivity, canonicity and presence of every blowup edge; when a
// coloring and color are supplied, every blowup edge must carry that color.
VerifyResult verify_embedding(const VertexMap& cert, const PartiteGraph& gamma, const Graph& h,
                              int t, const std::vector<int>& injection = {},
                              const EdgeColoring* coloring = nullptr, int color = 0);

} // namespace br
