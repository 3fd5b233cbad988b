#pragma once

#include "br/coloring.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"

#include <string>
#include <vector>

namespace br {

// Independent certificate checkers. These deliberately share no code with the
// search kernels: plain adjacency lookups and a from-scratch backtracker, so
// a bug in the searches cannot hide behind its own verifier.

struct CheckResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// A blowup embedding certificate against a (possibly partite) host. With an
// empty `parts` the canonicity requirement is skipped and only injectivity
// plus blowup edges are enforced.
CheckResult check_embedding_certificate(const Graph& host, const std::vector<std::vector<int>>& parts,
                                        const Graph& h, const VertexMap& cert, int t);

// A refuted-arrow certificate: the coloring is complete over the host's edge
// set and no color class contains a copy of H (naive injective search).
CheckResult check_coloring_certificate(const EdgeColoring& coloring, const Graph& host,
                                       const Graph& h);

} // namespace br
