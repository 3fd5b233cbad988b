#pragma once

#include "br/coloring.hpp"
#include "br/fraction.hpp"
#include "br/graph.hpp"
#include "br/partite.hpp"
#include "br/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace br {

// Exact edge density e(X,Y)/(|X||Y|) between disjoint nonempty sets.
Fraction density(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys);

enum class RegularityVerdict { Regular, Irregular, Unknown };

struct RegularityResult {
    RegularityVerdict verdict;
    // Violating sub-pair when irregular: |X'| >= eps|X|, |Y'| >= eps|Y| and
    // |d(X,Y) - d(X',Y')| >= eps.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

enum class RegularityMode { Exact, Heuristic };

// Exact mode decides by subset enumeration (|X|+|Y| <= 26). Heuristic mode
// samples for irregularity witnesses and certifies regularity only through
// degree/codegree sufficient conditions; otherwise the verdict is Unknown.
RegularityResult is_regular_pair(const Graph& g, const std::vector<int>& xs,
                                 const std::vector<int>& ys, double eps,
                                 RegularityMode mode = RegularityMode::Exact,
                                 std::uint64_t seed = 1);

// Product set W_1 x ... x W_m inside the ground parts.
struct Cylinder {
    std::vector<std::vector<int>> parts;
    // Regular in every color (per the last audit); Unknown counts as not.
    bool regular_all_colors = false;

    std::int64_t tuple_count() const {
        std::int64_t p = 1;
        for (const auto& w : parts) p *= static_cast<std::int64_t>(w.size());
        return p;
    }
};

struct CylinderPartition {
    std::vector<Cylinder> cylinders;
    double eps = 0;
    std::int64_t irregular_tuple_mass = 0; // tuples in not-regular cylinders
    std::int64_t total_tuples = 0;
    bool regular = false; // irregular mass <= eps * total
    int splits_performed = 0;
};

// Witness-split refinement: start from the trivial cylinder, split irregular
// cylinders along violating sub-pairs into 4 until the irregular tuple mass
// drops below eps * total or the split budget runs out.
CylinderPartition cylinder_partition(const PartiteGraph& ground, const EdgeColoring& coloring,
                                     double eps, int max_splits = 64,
                                     std::uint64_t seed = 1);

struct CountingBound {
    double lo = 0, hi = 0;
    double center = 0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Counting-lemma interval: prod(d) * prod|W_i| +- eps * e(H) * prod|W_i|,
// clamped below at zero.
CountingBound counting_lemma_bound(const std::vector<double>& densities,
                                   const std::vector<int>& part_sizes, double eps, const Graph& h);

struct EquitablePartitionResult {
    PartiteGraph partition;
    std::int64_t canonical_copies = 0;
};

// Best of `trials` uniformly random equitable k-partitions of V(G), scored by
// canonical copies of H (pattern vertex i in part i). An optional initial
// partition is scored as trial 0.
EquitablePartitionResult best_equitable_partition(const Graph& g, const Graph& h, int k,
                                                  int trials, std::uint64_t seed,
                                                  const std::vector<std::vector<int>>* initial = nullptr);

} // namespace br
