#include "br/partite.hpp"
#include "br/coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace br {

PartiteGraph::PartiteGraph(Graph graph, std::vector<std::vector<int>> parts_)
    : g(std::move(graph)), parts(std::move(parts_)), part_of(g.vertex_count(), -1) {
    for (int i = 0; i < part_count(); ++i) {
        for (int v : parts[i]) {
            if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("PartiteGraph: vertex out of range");
            if (part_of[v] != -1) throw std::invalid_argument("PartiteGraph: parts not disjoint");
            part_of[v] = i;
        }
    }
}

Bitset PartiteGraph::part_bits(int i) const {
    Bitset b(g.vertex_count());
    for (int v : parts[i]) b.set(v);
    return b;
}

PartiteGraph blowup(const Graph& h, int t) {
    if (t < 1) throw std::invalid_argument("blowup: t must be >= 1");
    int k = h.vertex_count();
    Graph g(k * t);
    for (auto [u, v] : h.edges())
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) g.add_edge(u * t + a, v * t + b);
    std::vector<std::vector<int>> parts(k);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < t; ++a) parts[i].push_back(i * t + a);
    return PartiteGraph(std::move(g), std::move(parts));
}

namespace {

std::vector<int> resolve_injection(const PartiteGraph& gamma, const Graph& h,
                                   const std::vector<int>& injection) {
    int k = h.vertex_count();
    if (k > gamma.part_count()) throw std::invalid_argument("pattern has more vertices than parts");
    std::vector<int> inj = injection;
    if (inj.empty()) {
        inj.resize(k);
        for (int i = 0; i < k; ++i) inj[i] = i;
    }
    if (static_cast<int>(inj.size()) != k) throw std::invalid_argument("injection size mismatch");
    std::vector<bool> used(gamma.part_count(), false);
    for (int p : inj) {
        if (p < 0 || p >= gamma.part_count()) throw std::invalid_argument("injection part out of range");
        if (used[p]) throw std::invalid_argument("injection not injective");
        used[p] = true;
    }
    return inj;
}

} // namespace

std::int64_t count_canonical_copies(const PartiteGraph& gamma, const Graph& h,
                                    const std::vector<int>& injection) {
    auto inj = resolve_injection(gamma, h, injection);
    int k = h.vertex_count();
    int n = gamma.g.vertex_count();
    std::vector<Bitset> part_bits(k);
    for (int i = 0; i < k; ++i) part_bits[i] = gamma.part_bits(inj[i]);

    std::int64_t total = 0;
    std::vector<int> chosen(k, -1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) { ++total; return; }
        Bitset cand = part_bits[i];
        for (int j = 0; j < i; ++j)
            if (h.has_edge(i, j)) cand &= gamma.g.neighbors(chosen[j]);
        cand.for_each([&](int v) {
            chosen[i] = v;
            self(self, i + 1);
        });
        chosen[i] = -1;
    };
    // Counting could shortcut the last level by cardinality, but exhaustive
    // recursion is the independent-oracle role this function plays.
    rec(rec, 0);
    (void)n;
    return total;
}

BlowupSearchResult find_canonical_blowup(const PartiteGraph& gamma, const Graph& h, int t,
                                         const std::vector<int>& injection,
                                         int exact_part_bound, std::int64_t budget) {
    if (t < 1) throw std::invalid_argument("find_canonical_blowup: t must be >= 1");
    auto inj = resolve_injection(gamma, h, injection);
    int k = h.vertex_count();

    bool exact = true;
    for (int p : inj)
        if (static_cast<int>(gamma.parts[p].size()) > exact_part_bound) exact = false;
    if (exact) budget = std::numeric_limits<std::int64_t>::max();

    std::vector<Bitset> part_bits(k);
    for (int i = 0; i < k; ++i) {
        part_bits[i] = gamma.part_bits(inj[i]);
        if (part_bits[i].count() < t)
            return {BlowupStatus::Refuted, std::nullopt, 0};
    }

    // Slots in order (pattern 0 copies 0..t-1, pattern 1 copies 0..t-1, ...).
    // Within a part, copies are chosen in increasing vertex order to kill the
    // t! symmetry.
    VertexMap map;
    map.pattern_n = k;
    map.t = t;
    map.host.assign(static_cast<std::size_t>(k) * t, -1);

    std::int64_t nodes = 0;
    bool exhausted = false;

    auto rec = [&](auto&& self, int slot) -> bool {
        if (slot == k * t) return true;
        if (++nodes > budget) { exhausted = true; return false; }
        int i = slot / t, c = slot % t;
        Bitset cand = part_bits[i];
        for (int j = 0; j < i; ++j)
            if (h.has_edge(i, j))
                for (int d = 0; d < t; ++d) cand &= gamma.g.neighbors(map.at(j, d));
        int lower = (c > 0) ? map.at(i, c - 1) : -1;
        for (int d = 0; d < c; ++d) cand.reset(map.at(i, d));
        // Remaining slots in this part need that many candidates above v.
        for (int v = cand.find_next(lower + 1); v != -1; v = cand.find_next(v + 1)) {
            map.at(i, c) = v;
            if (self(self, slot + 1)) return true;
            if (exhausted) return false;
        }
        map.at(i, c) = -1;
        return false;
    };

    if (rec(rec, 0)) return {BlowupStatus::Found, map, nodes};
    if (exhausted) return {BlowupStatus::BudgetExhausted, std::nullopt, nodes};
    (void)exact;
    return {BlowupStatus::Refuted, std::nullopt, nodes};
}

int max_canonical_blowup(const PartiteGraph& gamma, const Graph& h,
                         const std::vector<int>& injection) {
    int best = 0;
    for (int t = 1;; ++t) {
        auto res = find_canonical_blowup(gamma, h, t, injection);
        if (res.status != BlowupStatus::Found) break;
        best = t;
    }
    return best;
}

VerifyResult verify_embedding(const VertexMap& cert, const PartiteGraph& gamma, const Graph& h,
                              int t, const std::vector<int>& injection,
                              const EdgeColoring* coloring, int color) {
    int k = h.vertex_count();
    if (cert.pattern_n != k) return {false, "pattern size mismatch"};
    if (cert.t != t) return {false, "blowup size mismatch"};
    if (static_cast<int>(cert.host.size()) != k * t) return {false, "map length mismatch"};

    std::vector<int> inj;
    try {
        inj = resolve_injection(gamma, h, injection);
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }

    int n = gamma.g.vertex_count();
    std::vector<bool> used(n, false);
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c < t; ++c) {
            int v = cert.at(i, c);
            if (v < 0 || v >= n) return {false, "host vertex out of range"};
            if (used[v]) return {false, "not injective"};
            used[v] = true;
            if (gamma.part_of[v] != inj[i]) return {false, "canonicity violated: vertex outside its part"};
        }
    }
    for (auto [i, j] : h.edges()) {
        for (int a = 0; a < t; ++a) {
            for (int b = 0; b < t; ++b) {
                int u = cert.at(i, a), v = cert.at(j, b);
                if (!gamma.g.has_edge(u, v)) return {false, "missing blowup edge"};
                if (coloring && coloring->color_of(u, v) != color)
                    return {false, "blowup edge has wrong color"};
            }
        }
    }
    return {true, ""};
}

} // namespace br
