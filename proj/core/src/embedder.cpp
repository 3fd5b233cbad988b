#include "br/embedder.hpp"
#include "br/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace br {

std::vector<int> choose_vertex_order(const Graph& h, const std::vector<std::vector<double>>& p) {
    int k = h.vertex_count();
    if (h.edge_count() == 0) throw std::invalid_argument("choose_vertex_order: pattern has no edge");

    // First pair: minimum-density edge, ties by lowest (i, j).
    int bi = -1, bj = -1;
    double bd = 2;
    for (auto [i, j] : h.edges()) {
        double d = p[i][j];
        if (d < bd - 1e-15) {
            bd = d;
            bi = i;
            bj = j;
        }
    }
    std::vector<int> order{bi, bj};
    std::vector<bool> placed(k, false);
    placed[bi] = placed[bj] = true;

    // Greedy max-product: each step takes the vertex whose density product
    // into the placed prefix is largest (empty product = 1), lowest index on
    // ties.
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        double best_q = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            double q = 1;
            for (int u : order)
                if (h.has_edge(u, v)) q *= p[u][v];
            if (q > best_q + 1e-15) {
                best = v;
                best_q = q;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

namespace {

// Extension set of a prefix copy into the part at order position j.
Bitset extension_set(const PartiteGraph& gamma, const Graph& h, const std::vector<int>& order,
                     const std::vector<int>& prefix_copy, int j) {
    Bitset ext = gamma.part_bits(order[j]);
    for (std::size_t a = 0; a < prefix_copy.size(); ++a)
        if (h.has_edge(order[a], order[j])) ext &= gamma.g.neighbors(prefix_copy[a]);
    return ext;
}

} // namespace

bool is_good_copy(const PartiteGraph& gamma, const Graph& h, const std::vector<int>& order,
                  const std::vector<std::vector<double>>& p, double eps,
                  const std::vector<int>& prefix_copy) {
    int k = h.vertex_count();
    int i = static_cast<int>(prefix_copy.size());
    for (int j = i; j < k; ++j) {
        double threshold = 1;
        bool constrained = false;
        for (int a = 0; a < i; ++a) {
            if (h.has_edge(order[a], order[j])) {
                threshold *= (p[order[a]][order[j]] - eps);
                constrained = true;
            }
        }
        if (!constrained) continue; // empty product: the whole part extends
        double needed = threshold * static_cast<double>(gamma.parts[order[j]].size());
        if (static_cast<double>(extension_set(gamma, h, order, prefix_copy, j).count()) < needed)
            return false;
    }
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
kst_biclique(const Bipartite& b, int t, int exact_bound) {
    if (t < 1) throw std::invalid_argument("kst_biclique: t must be >= 1");
    if (t > b.left || t > b.right) return std::nullopt;

    if (b.left <= exact_bound && b.right <= exact_bound) {
        // Branch and bound over left subsets in increasing vertex order,
        // carrying the common right-neighborhood.
        std::vector<int> chosen;
        Bitset all(b.right);
        all.set_all();
        auto rec = [&](auto&& self, int from, const Bitset& common) -> bool {
            if (static_cast<int>(chosen.size()) == t) return true;
            int need = t - static_cast<int>(chosen.size());
            if (b.left - from < need) return false;
            for (int l = from; l <= b.left - need; ++l) {
                Bitset next = common & b.adj[l];
                if (next.count() < t) continue;
                chosen.push_back(l);
                if (self(self, l + 1, next)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!rec(rec, 0, all)) return std::nullopt;
        Bitset common(b.right);
        common.set_all();
        for (int l : chosen) common &= b.adj[l];
        std::vector<int> rights;
        common.for_each([&](int r) { if (static_cast<int>(rights.size()) < t) rights.push_back(r); });
        return std::make_pair(chosen, rights);
    }

    // Heuristic: the proof's popular-subset idea run greedily over left
    // vertices in degree order, keeping the intersection large.
    std::vector<int> by_degree(b.left);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int c) {
        int da = b.adj[a].count(), dc = b.adj[c].count();
        return da != dc ? da > dc : a < c;
    });
    std::vector<int> chosen;
    Bitset common(b.right);
    common.set_all();
    for (int l : by_degree) {
        Bitset next = common & b.adj[l];
        if (next.count() >= t) {
            chosen.push_back(l);
            common = next;
            if (static_cast<int>(chosen.size()) == t) {
                std::vector<int> rights;
                common.for_each([&](int r) {
                    if (static_cast<int>(rights.size()) < t) rights.push_back(r);
                });
                return std::make_pair(chosen, rights);
            }
        }
    }
    return std::nullopt;
}

BicliqueResult max_balanced_biclique(const Bipartite& b, int exact_bound) {
    BicliqueResult best;
    for (int t = 1; t <= std::min(b.left, b.right); ++t) {
        auto found = kst_biclique(b, t, exact_bound);
        if (!found) break;
        best = {t, found->first, found->second};
    }
    return best;
}

namespace {

// Delete lowest-degree vertices one at a time until both sides have exactly
// `target` vertices. Returns kept index lists.
std::pair<std::vector<int>, std::vector<int>> rebalance_to(const Bipartite& b, int target) {
    std::vector<bool> left_dead(b.left, false), right_dead(b.right, false);
    std::vector<int> ldeg(b.left), rdeg(b.right, 0);
    for (int l = 0; l < b.left; ++l) {
        ldeg[l] = b.adj[l].count();
        b.adj[l].for_each([&](int r) { ++rdeg[r]; });
    }
    int lalive = b.left, ralive = b.right;
    using Entry = std::pair<int, int>; // (degree, vertex), lazy heap
    auto cmp = [](const Entry& a, const Entry& b2) { return a > b2; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> lheap(cmp), rheap(cmp);
    for (int l = 0; l < b.left; ++l) lheap.push({ldeg[l], l});
    for (int r = 0; r < b.right; ++r) rheap.push({rdeg[r], r});

    while (lalive > target || ralive > target) {
        // Drop from the side that is larger; on ties, the side holding the
        // smaller minimum degree.
        bool drop_left;
        if (lalive != ralive) drop_left = lalive > ralive;
        else {
            while (!lheap.empty() && (left_dead[lheap.top().second] || lheap.top().first != ldeg[lheap.top().second])) lheap.pop();
            while (!rheap.empty() && (right_dead[rheap.top().second] || rheap.top().first != rdeg[rheap.top().second])) rheap.pop();
            drop_left = lheap.top().first <= rheap.top().first;
        }
        if (drop_left) {
            while (left_dead[lheap.top().second] || lheap.top().first != ldeg[lheap.top().second]) lheap.pop();
            int l = lheap.top().second;
            lheap.pop();
            left_dead[l] = true;
            --lalive;
            b.adj[l].for_each([&](int r) {
                if (!right_dead[r]) rheap.push({--rdeg[r], r});
            });
        } else {
            while (right_dead[rheap.top().second] || rheap.top().first != rdeg[rheap.top().second]) rheap.pop();
            int r = rheap.top().second;
            rheap.pop();
            right_dead[r] = true;
            --ralive;
            for (int l = 0; l < b.left; ++l)
                if (!left_dead[l] && b.adj[l].test(r)) lheap.push({--ldeg[l], l});
        }
    }
    std::vector<int> lk, rk;
    for (int l = 0; l < b.left; ++l)
        if (!left_dead[l]) lk.push_back(l);
    for (int r = 0; r < b.right; ++r)
        if (!right_dead[r]) rk.push_back(r);
    return {lk, rk};
}

} // namespace

EmbedderResult find_blowup_greedy(const PartiteGraph& gamma, const Graph& h,
                                  const EmbedderParams& params) {
    int k = h.vertex_count();
    if (k == 0) throw std::invalid_argument("find_blowup_greedy: empty pattern");
    if (gamma.part_count() < k) throw std::invalid_argument("find_blowup_greedy: not enough parts");

    EmbedderResult result;

    // Edgeless pattern: any t vertices per part form the blowup.
    if (h.edge_count() == 0) {
        int t = gamma.parts[0].size();
        for (int i = 0; i < k; ++i) t = std::min<int>(t, gamma.parts[i].size());
        result.achieved_t = t;
        result.order.resize(k);
        std::iota(result.order.begin(), result.order.end(), 0);
        result.certificate.pattern_n = k;
        result.certificate.t = t;
        result.certificate.host.resize(static_cast<std::size_t>(k) * t);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < t; ++c) result.certificate.at(i, c) = gamma.parts[i][c];
        return result;
    }

    // Effective densities: measured, capped by any supplied hypothesis (the
    // hypothesis is a lower bound, so the measured value is the honest input
    // whenever it is smaller).
    std::vector<std::vector<double>> p(k, std::vector<double>(k, 0));
    for (auto [i, j] : h.edges()) {
        double measured = density(gamma.g, gamma.parts[i], gamma.parts[j]).value();
        double eff = measured;
        if (!params.densities.empty())
            eff = std::min(measured, params.densities[i][j]);
        p[i][j] = p[j][i] = eff;
    }

    std::vector<int> order = params.order.empty() ? choose_vertex_order(h, p) : params.order;
    result.order = order;

    double p12_raw = p[order[0]][order[1]];
    if (p12_raw <= 0) return result; // an empty required pair: no blowup at all
    double p12 = std::min(p12_raw, 0.5);
    result.p12 = p12;

    double alpha = params.alpha;
    double eps = alpha * alpha / (8.0 * k * k);
    double delta = (8.0 * k * eps) / (p12 * std::log(1.0 / p12));
    result.epsilon = eps;
    result.delta = delta;

    // Rate parameters for the report (asymptotic, never asserted).
    int n_ref = gamma.parts[order[0]].size();
    for (int a = 0; a < k; ++a) n_ref = std::min<int>(n_ref, gamma.parts[order[a]].size());
    {
        double prod_rest = 1;
        for (auto [i, j] : h.edges())
            if (!((i == order[0] && j == order[1]) || (i == order[1] && j == order[0])))
                prod_rest *= p[i][j];
        result.target_formula_t =
            (prod_rest - alpha) * std::log(static_cast<double>(n_ref)) / std::log(1.0 / p12);
    }

    // Stage 1: good vertices of the first part.
    std::vector<std::vector<int>> matching; // copies over order positions
    const auto& w1 = gamma.parts[order[0]];
    for (int v : w1)
        if (is_good_copy(gamma, h, order, p, eps, {v})) matching.push_back({v});

    std::int64_t t1_target = static_cast<std::int64_t>(
        std::floor((1.0 - h.degree(order[0]) * eps) * static_cast<double>(w1.size())));
    result.stages.push_back({1, 1.0, t1_target, static_cast<int>(matching.size()),
                             static_cast<double>(matching.size()) / static_cast<double>(w1.size())});

    constexpr int kExactBound = 24;

    auto q_of = [&](int pos) {
        double q = 1;
        for (int a = 0; a < pos; ++a)
            if (h.has_edge(order[a], order[pos])) q *= p[order[a]][order[pos]];
        return q;
    };

    std::int64_t prev_target = t1_target;
    for (int pos = 1; pos < k && !matching.empty(); ++pos) {
        // Auxiliary bipartite graph: copies of the prefix vs the next part,
        // adjacent when the extension is a good copy of the larger prefix.
        const auto& wj = gamma.parts[order[pos]];
        Bipartite aux(static_cast<int>(matching.size()), static_cast<int>(wj.size()));
        for (std::size_t ci = 0; ci < matching.size(); ++ci) {
            Bitset ext = extension_set(gamma, h, order, matching[ci], pos);
            for (std::size_t ri = 0; ri < wj.size(); ++ri) {
                if (!ext.test(wj[ri])) continue;
                auto extended = matching[ci];
                extended.push_back(wj[ri]);
                if (is_good_copy(gamma, h, order, p, eps, extended))
                    aux.add(static_cast<int>(ci), static_cast<int>(ri));
            }
        }

        std::int64_t target;
        double q = q_of(pos);
        if (pos == 1) {
            target = static_cast<std::int64_t>(std::floor(
                (1.0 - delta) * std::log(static_cast<double>(n_ref)) / std::log(1.0 / p12)));
            // Case-1 rebalancing only matters when the exact search cannot
            // run; it trims both sides to the reference size by min degree.
            if ((aux.left > kExactBound || aux.right > kExactBound) &&
                (aux.left > n_ref || aux.right > n_ref)) {
                int side = std::min({aux.left, aux.right, n_ref});
                auto [lk, rk] = rebalance_to(aux, side);
                Bipartite trimmed(static_cast<int>(lk.size()), static_cast<int>(rk.size()));
                for (std::size_t li = 0; li < lk.size(); ++li)
                    for (std::size_t ri = 0; ri < rk.size(); ++ri)
                        if (aux.adj[lk[li]].test(rk[ri]))
                            trimmed.add(static_cast<int>(li), static_cast<int>(ri));
                // Remap through the kept-index lists below via lk / rk.
                BicliqueResult bic = max_balanced_biclique(trimmed, kExactBound);
                std::vector<std::vector<int>> next;
                for (int c = 0; c < bic.t; ++c)
                    next.push_back({matching[lk[bic.left[c]]][0], wj[rk[bic.right[c]]]});
                matching = std::move(next);
                result.stages.push_back({pos + 1, q, target, static_cast<int>(matching.size()), 1.0});
                prev_target = target;
                continue;
            }
        } else {
            target = static_cast<std::int64_t>(
                std::floor((q - k * eps) * static_cast<double>(prev_target)));
        }

        BicliqueResult bic = max_balanced_biclique(aux, kExactBound);
        std::vector<std::vector<int>> next;
        for (int c = 0; c < bic.t; ++c) {
            auto copy = matching[bic.left[c]];
            copy.push_back(wj[bic.right[c]]);
            next.push_back(std::move(copy));
        }
        matching = std::move(next);
        result.stages.push_back({pos + 1, q, target, static_cast<int>(matching.size()), 1.0});
        prev_target = target;
    }

    int t = (static_cast<int>(result.stages.size()) == k) ? static_cast<int>(matching.size()) : 0;

    if (t >= 1) {
        result.achieved_t = t;
        result.certificate.pattern_n = k;
        result.certificate.t = t;
        result.certificate.host.assign(static_cast<std::size_t>(k) * t, -1);
        for (int c = 0; c < t; ++c)
            for (int pos = 0; pos < k; ++pos)
                result.certificate.at(order[pos], c) = matching[c][pos];
        return result;
    }

    // Small-instance fallback: the greedy thresholds can starve tiny parts
    // even when a single canonical copy exists; recover t = 1 exactly.
    bool small = true;
    for (int i = 0; i < k; ++i)
        if (gamma.parts[i].size() > 12) small = false;
    if (small) {
        std::vector<int> identity(k);
        std::iota(identity.begin(), identity.end(), 0);
        auto exact = find_canonical_blowup(gamma, h, 1, identity);
        if (exact.status == BlowupStatus::Found) {
            result.achieved_t = 1;
            result.certificate = *exact.certificate;
            result.used_exact_fallback = true;
        }
    }
    return result;
}

} // namespace br
