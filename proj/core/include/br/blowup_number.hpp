#pragma once

#include "br/arrow.hpp"
#include "br/coloring.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"
#include "br/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace br {

// G, H, r, t with the arrow precondition either checked here or trusted via
// an externally supplied proof token.
struct BlowupInstance {
    Graph g;
    Graph h;
    int r;
    int t;
};

enum class BoundKind { Lower, UpperExact };

struct BoundCertificate {
    BoundKind kind;
    int n;
    // For Lower: a coloring of G[n] with no monochromatic canonical H[t].
    std::optional<EdgeColoring> witness;
};

// Copies of H in G with the per-copy part data precomputed once; the same
// copies are probed across millions of colorings.
struct CopyCache {
    std::vector<VertexMap> copies;     // representative labelings, t = 1
    Graph h;
};

CopyCache make_copy_cache(const Graph& g, const Graph& h);

// First monochromatic canonical H[t] under the coloring of G[n], as
// (color, blowup witness), or absence.
struct MonoBlowup {
    int color;
    VertexMap map; // over the blowup host's vertices
};
std::optional<MonoBlowup> has_mono_canonical_blowup(const EdgeColoring& coloring, const Graph& g,
                                                    const Graph& h, int t, int n,
                                                    const CopyCache* cache = nullptr);

struct BlowupNumberResult {
    Verdict verdict;                       // Proved = value found exactly
    std::optional<int> value;              // least n with the all-colorings property
    std::optional<BoundCertificate> best_lower;
    std::int64_t nodes = 0;
};

// Least n in [max(t,1), n_max] such that every r-coloring of G[n] contains a
// monochromatic canonical H[t]; DFS over colorings per n, linear scan in n so
// every level below the answer yields a lower-bound certificate.
BlowupNumberResult blowup_ramsey_exact(const Graph& g, const Graph& h, int r, int t, int n_max,
                                       std::int64_t budget = kDefaultBudget);

// Variant where any (non-canonical) monochromatic copy of H[t] counts.
// Finiteness requires hom-arrows, which is checked up front.
BlowupNumberResult blowup_ramsey_noncanonical(const Graph& g, const Graph& h, int r, int t,
                                              int n_max, std::int64_t budget = kDefaultBudget);

enum class LowerBoundStrategy { Random, Local };

// Randomized / min-conflict search for a coloring of G[n] with no
// monochromatic canonical H[t]. Absence after the budget proves nothing.
std::optional<BoundCertificate> lower_bound_search(const Graph& g, const Graph& h, int r, int t,
                                                   int n, LowerBoundStrategy strategy,
                                                   std::int64_t budget, std::uint64_t seed);

// Independent re-check of a Lower certificate.
bool verify_lower_certificate(const BoundCertificate& cert, const Graph& g, const Graph& h,
                              int r, int t);

} // namespace br
