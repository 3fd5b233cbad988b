#include "br/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace br {

namespace {

int edges_between(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    Bitset yb(g.vertex_count());
    for (int y : ys) yb.set(y);
    int e = 0;
    for (int x : xs) e += g.neighbors(x).intersection_count(yb);
    return e;
}

void check_disjoint(const std::vector<int>& xs, const std::vector<int>& ys) {
    if (xs.empty() || ys.empty()) throw std::invalid_argument("density: empty side");
    for (int x : xs)
        for (int y : ys)
            if (x == y) throw std::invalid_argument("density: sides not disjoint");
}

} // namespace

Fraction density(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    check_disjoint(xs, ys);
    return Fraction(edges_between(g, xs, ys),
                    static_cast<std::int64_t>(xs.size()) * static_cast<std::int64_t>(ys.size()));
}

namespace {

RegularityResult exact_regular(const Graph& g, const std::vector<int>& xs,
                               const std::vector<int>& ys, double eps) {
    // Enumerate subsets of the smaller side; for each, the extreme sub-pair
    // densities over the other side are achieved by degree-sorted prefixes.
    const std::vector<int>& X = xs.size() <= ys.size() ? xs : ys;
    const std::vector<int>& Y = xs.size() <= ys.size() ? ys : xs;
    int nx = static_cast<int>(X.size()), ny = static_cast<int>(Y.size());
    double d = density(g, xs, ys).value();

    int min_x = static_cast<int>(std::ceil(eps * nx - 1e-12));
    min_x = std::max(min_x, 1);
    int min_y = static_cast<int>(std::ceil(eps * ny - 1e-12));
    min_y = std::max(min_y, 1);

    // deg[y-index] within the current subset of X, updated per mask via the
    // lowest-bit recurrence.
    std::vector<std::vector<std::int16_t>> deg(std::size_t{1} << nx,
                                               std::vector<std::int16_t>(ny, 0));
    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
        std::uint32_t low = mask & (-mask);
        int xi = __builtin_ctz(low);
        const auto& prev = deg[mask ^ low];
        auto& cur = deg[mask];
        for (int yi = 0; yi < ny; ++yi)
            cur[yi] = static_cast<std::int16_t>(prev[yi] + (g.has_edge(X[xi], Y[yi]) ? 1 : 0));
    }

    std::vector<int> yi_sorted(ny);
    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
        int sx = __builtin_popcount(mask);
        if (sx < min_x) continue;
        const auto& cur = deg[mask];
        std::iota(yi_sorted.begin(), yi_sorted.end(), 0);
        std::sort(yi_sorted.begin(), yi_sorted.end(),
                  [&](int a, int b) { return cur[a] > cur[b]; });
        std::int64_t prefix = 0;
        std::vector<std::int64_t> top(ny + 1, 0);
        for (int s = 1; s <= ny; ++s) {
            prefix += cur[yi_sorted[s - 1]];
            top[s] = prefix;
        }
        std::int64_t total = top[ny];
        for (int s = min_y; s <= ny; ++s) {
            double dmax = static_cast<double>(top[s]) / (static_cast<double>(sx) * s);
            double dmin = static_cast<double>(total - top[ny - s]) / (static_cast<double>(sx) * s);
            double dev_max = std::abs(dmax - d);
            double dev_min = std::abs(dmin - d);
            if (dev_max >= eps || dev_min >= eps) {
                bool use_max = dev_max >= dev_min;
                std::vector<int> wy;
                if (use_max) {
                    for (int i = 0; i < s; ++i) wy.push_back(Y[yi_sorted[i]]);
                } else {
                    for (int i = ny - s; i < ny; ++i) wy.push_back(Y[yi_sorted[i]]);
                }
                std::vector<int> wx;
                for (int i = 0; i < nx; ++i)
                    if (mask & (1u << i)) wx.push_back(X[i]);
                if (xs.size() <= ys.size())
                    return {RegularityVerdict::Irregular, std::make_pair(wx, wy)};
                return {RegularityVerdict::Irregular, std::make_pair(wy, wx)};
            }
        }
    }
    return {RegularityVerdict::Regular, std::nullopt};
}

RegularityResult heuristic_regular(const Graph& g, const std::vector<int>& xs,
                                   const std::vector<int>& ys, double eps, std::uint64_t seed) {
    double d = density(g, xs, ys).value();
    int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());

    // Random sub-pair sampling for an irregularity witness.
    Rng rng(seed);
    int min_x = std::max(1, static_cast<int>(std::ceil(eps * nx - 1e-12)));
    int min_y = std::max(1, static_cast<int>(std::ceil(eps * ny - 1e-12)));
    const int trials = 400;
    for (int trial = 0; trial < trials; ++trial) {
        int sx = min_x + static_cast<int>(rng.below(static_cast<std::uint64_t>(nx - min_x + 1)));
        int sy = min_y + static_cast<int>(rng.below(static_cast<std::uint64_t>(ny - min_y + 1)));
        std::vector<int> px = xs, py = ys;
        for (int i = 0; i < sx; ++i) std::swap(px[i], px[i + rng.below_int(nx - i)]);
        for (int i = 0; i < sy; ++i) std::swap(py[i], py[i + rng.below_int(ny - i)]);
        px.resize(sx);
        py.resize(sy);
        double dp = density(g, px, py).value();
        if (std::abs(dp - d) >= eps)
            return {RegularityVerdict::Irregular, std::make_pair(px, py)};
    }

    // Sufficient condition at weaker parameters: tight degree and codegree
    // concentration. Conservative thresholds; anything in between is Unknown.
    Bitset yb(g.vertex_count());
    for (int y : ys) yb.set(y);
    double deg_dev = 0;
    for (int x : xs) {
        double dx = static_cast<double>(g.neighbors(x).intersection_count(yb)) / ny;
        deg_dev = std::max(deg_dev, std::abs(dx - d));
    }
    double codeg_dev = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            Bitset common = g.neighbors(xs[i]) & g.neighbors(xs[j]);
            double cd = static_cast<double>(common.intersection_count(yb)) / ny;
            codeg_dev = std::max(codeg_dev, std::abs(cd - d * d));
        }
    }
    if (deg_dev <= eps * eps / 4 && codeg_dev <= eps * eps * eps)
        return {RegularityVerdict::Regular, std::nullopt};
    return {RegularityVerdict::Unknown, std::nullopt};
}

} // namespace

RegularityResult is_regular_pair(const Graph& g, const std::vector<int>& xs,
                                 const std::vector<int>& ys, double eps, RegularityMode mode,
                                 std::uint64_t seed) {
    check_disjoint(xs, ys);
    if (mode == RegularityMode::Exact) {
        if (xs.size() + ys.size() > 26)
            throw std::invalid_argument("is_regular_pair: exact mode limited to |X|+|Y| <= 26");
        return exact_regular(g, xs, ys, eps);
    }
    return heuristic_regular(g, xs, ys, eps, seed);
}

namespace {

// Regular in all colors, or nullopt plus a witness pair for some color.
struct CylinderAudit {
    bool regular;
    int bad_i = -1, bad_j = -1;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

CylinderAudit audit_cylinder(const Cylinder& cyl, const std::vector<Graph>& classes, double eps,
                             std::uint64_t seed) {
    int m = static_cast<int>(cyl.parts.size());
    for (const Graph& cls : classes) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                RegularityMode mode = cyl.parts[i].size() + cyl.parts[j].size() <= 26
                                          ? RegularityMode::Exact
                                          : RegularityMode::Heuristic;
                auto res = is_regular_pair(cls, cyl.parts[i], cyl.parts[j], eps, mode, seed);
                if (res.verdict != RegularityVerdict::Regular)
                    return {false, i, j, res.witness};
            }
        }
    }
    return {true, -1, -1, std::nullopt};
}

} // namespace

CylinderPartition cylinder_partition(const PartiteGraph& ground, const EdgeColoring& coloring,
                                     double eps, int max_splits, std::uint64_t seed) {
    int m = ground.part_count();
    if (m < 2) throw std::invalid_argument("cylinder_partition: need m >= 2 parts");

    std::vector<Graph> classes;
    for (int c = 1; c <= coloring.color_count(); ++c) classes.push_back(coloring.color_class(c));

    CylinderPartition result;
    result.eps = eps;
    result.total_tuples = 1;
    for (const auto& p : ground.parts) result.total_tuples *= static_cast<std::int64_t>(p.size());
    if (result.total_tuples > 10'000'000)
        throw std::invalid_argument("cylinder_partition: tuple space too large for the mass audit");

    result.cylinders.push_back({ground.parts, false});

    auto recompute_mass = [&]() {
        result.irregular_tuple_mass = 0;
        for (const auto& c : result.cylinders)
            if (!c.regular_all_colors) result.irregular_tuple_mass += c.tuple_count();
        result.regular =
            static_cast<double>(result.irregular_tuple_mass) <= eps * static_cast<double>(result.total_tuples);
    };

    std::vector<CylinderAudit> audits(1);
    audits[0] = audit_cylinder(result.cylinders[0], classes, eps, seed);
    result.cylinders[0].regular_all_colors = audits[0].regular;
    recompute_mass();

    while (!result.regular && result.splits_performed < max_splits) {
        // Split the irregular cylinder with the largest tuple mass.
        int target = -1;
        std::int64_t best_mass = 0;
        for (std::size_t i = 0; i < result.cylinders.size(); ++i) {
            if (result.cylinders[i].regular_all_colors) continue;
            std::int64_t mass = result.cylinders[i].tuple_count();
            if (mass > best_mass && audits[i].witness) {
                best_mass = mass;
                target = static_cast<int>(i);
            }
        }
        if (target < 0) break; // irregular without a usable witness (Unknown)

        Cylinder cyl = result.cylinders[target];
        auto audit = audits[target];
        const auto& [wx, wy] = *audit.witness;
        int i = audit.bad_i, j = audit.bad_j;

        auto split_side = [&](const std::vector<int>& whole, const std::vector<int>& sub) {
            Bitset in_sub(ground.g.vertex_count());
            for (int v : sub) in_sub.set(v);
            std::vector<int> a, b;
            for (int v : whole) (in_sub.test(v) ? a : b).push_back(v);
            return std::make_pair(a, b);
        };
        auto [xi_in, xi_out] = split_side(cyl.parts[i], wx);
        auto [yj_in, yj_out] = split_side(cyl.parts[j], wy);

        std::vector<Cylinder> pieces;
        for (const auto& xi : {xi_in, xi_out}) {
            for (const auto& yj : {yj_in, yj_out}) {
                if (xi.empty() || yj.empty()) continue;
                Cylinder piece = cyl;
                piece.parts[i] = xi;
                piece.parts[j] = yj;
                piece.regular_all_colors = false;
                pieces.push_back(std::move(piece));
            }
        }
        result.cylinders.erase(result.cylinders.begin() + target);
        audits.erase(audits.begin() + target);
        for (auto& piece : pieces) {
            auto a = audit_cylinder(piece, classes, eps, seed);
            piece.regular_all_colors = a.regular;
            result.cylinders.push_back(std::move(piece));
            audits.push_back(std::move(a));
        }
        ++result.splits_performed;
        recompute_mass();
    }
    return result;
}

CountingBound counting_lemma_bound(const std::vector<double>& densities,
                                   const std::vector<int>& part_sizes, double eps, const Graph& h) {
    if (densities.size() != static_cast<std::size_t>(h.edge_count()))
        throw std::invalid_argument("counting_lemma_bound: one density per pattern edge");
    double prod_d = 1;
    for (double d : densities) prod_d *= d;
    double prod_w = 1;
    for (int s : part_sizes) prod_w *= static_cast<double>(s);
    double slack = eps * static_cast<double>(h.edge_count()) * prod_w;
    CountingBound b;
    b.center = prod_d * prod_w;
    b.lo = std::max(0.0, b.center - slack);
    b.hi = b.center + slack;
    return b;
}

EquitablePartitionResult best_equitable_partition(const Graph& g, const Graph& h, int k,
                                                  int trials, std::uint64_t seed,
                                                  const std::vector<std::vector<int>>* initial) {
    if (k > g.vertex_count()) throw std::invalid_argument("best_equitable_partition: k > |V(G)|");
    int n = g.vertex_count();
    Rng rng(seed);

    auto score = [&](std::vector<std::vector<int>> parts) -> EquitablePartitionResult {
        PartiteGraph pg(g, std::move(parts));
        std::int64_t copies = count_canonical_copies(pg, h);
        return {std::move(pg), copies};
    };

    std::optional<EquitablePartitionResult> best;
    if (initial) best = score(*initial);

    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (int trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < n - 1; ++i) std::swap(verts[i], verts[i + rng.below_int(n - i)]);
        std::vector<std::vector<int>> parts(k);
        for (int i = 0; i < n; ++i) parts[i % k].push_back(verts[i]);
        auto cand = score(std::move(parts));
        if (!best || cand.canonical_copies > best->canonical_copies) best = std::move(cand);
    }
    if (!best) throw std::invalid_argument("best_equitable_partition: zero trials and no initial partition");
    return *best;
}

} // namespace br
