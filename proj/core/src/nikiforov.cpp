#include "br/nikiforov.hpp"
#include "br/arrow.hpp"
#include "br/regularity.hpp"
#include "br/rng.hpp"
#include "br/subgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace br {

double NikiforovParams::lambda() const { return lambda_reference(eta, edge_count); }

double NikiforovParams::epsilon_dlr() const {
    return std::pow(eta, 2.0 * k * k) / (8.0 * k * k);
}

double NikiforovParams::alpha() const { return std::pow(eta, static_cast<double>(k) * k); }

double lambda_reference(double eta, int edge_count) {
    if (!(eta > 0) || !(eta < std::exp(-1.0)))
        throw std::invalid_argument("lambda_reference: eta must lie in (0, 1/e)");
    if (edge_count < 1) throw std::invalid_argument("lambda_reference: edge count must be >= 1");
    double exponent = 1.0 - 1.0 / static_cast<double>(edge_count);
    return std::pow(eta, exponent) / (5.0 * std::log(1.0 / eta));
}

SouzaB souza_b_reference(int r, int edge_count, double gamma) {
    if (r < 2) throw std::invalid_argument("souza_b_reference: r must be >= 2");
    if (edge_count < 1) throw std::invalid_argument("souza_b_reference: edge count must be >= 1");
    if (!(gamma > 0)) throw std::invalid_argument("souza_b_reference: gamma must be positive");
    SouzaB out;
    out.gamma_warning = gamma >= 1.0 / r;
    out.log_value = std::pow(static_cast<double>(r) + gamma, edge_count - 1) * std::log(static_cast<double>(r));
    out.value = out.log_value > 700 ? std::numeric_limits<double>::infinity() : std::exp(out.log_value);
    return out;
}

DenseBlowupReport find_blowup_in_dense(const Graph& g, const Graph& h, double eta, int trials,
                                       std::uint64_t seed) {
    int k = h.vertex_count();
    int n = g.vertex_count();
    DenseBlowupReport report;

    report.labeled_copies = count_labeled_copies(g, h);
    report.measured_density =
        static_cast<double>(report.labeled_copies) / std::pow(static_cast<double>(n), k);
    if (report.measured_density < eta) {
        report.refused = true;
        return report;
    }

    auto best = best_equitable_partition(g, h, k, trials, seed);
    report.parts = std::move(best.partition);

    NikiforovParams params{eta, k, h.edge_count()};
    EmbedderParams ep;
    ep.alpha = params.alpha();

    // The alpha < P hypothesis guard: measure first, reject honestly.
    double prod = 1;
    for (auto [i, j] : h.edges())
        prod *= density(report.parts.g, report.parts.parts[i], report.parts.parts[j]).value();
    report.density_product = prod;
    int min_part = n;
    for (const auto& part : report.parts.parts) min_part = std::min<int>(min_part, part.size());
    report.lambda_log_n = params.lambda() * std::log(static_cast<double>(std::max(min_part, 2)));
    if (!(ep.alpha < prod)) {
        report.refused = true;
        return report;
    }

    report.embedding = find_blowup_greedy(report.parts, h, ep);
    return report;
}

PopularColorReduction souza_reduction(const EdgeColoring& blowup_coloring, const Graph& g,
                                      const Graph& h, int r, int n) {
    PopularColorReduction out;
    out.popular = EdgeColoring(g, r);
    for (auto [u, v] : g.edges()) {
        std::vector<std::int64_t> tally(r + 1, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                ++tally[blowup_coloring.color_of(u * n + a, v * n + b)];
        int best = 1;
        for (int c = 2; c <= r; ++c)
            if (tally[c] > tally[best]) best = c; // ties keep the lowest index
        out.popular.set_color(out.popular.edge_index(u, v), best);
    }

    for (int c = 1; c <= r; ++c) {
        if (auto copy = contains_mono_copy(out.popular, h, c)) {
            out.color = c;
            out.copy = *copy;
            break;
        }
    }
    if (out.color == 0)
        throw std::invalid_argument("souza_reduction: popular coloring has no monochromatic H; G does not arrow H");

    out.parts = out.copy.host;
    Graph selected = blowup_coloring.color_class(out.color);
    for (auto [i, j] : h.edges()) {
        std::vector<int> wi(n), wj(n);
        std::iota(wi.begin(), wi.end(), out.parts[i] * n);
        std::iota(wj.begin(), wj.end(), out.parts[j] * n);
        out.pair_densities.push_back(density(selected, wi, wj).value());
    }
    return out;
}

std::vector<DemoRow> blowup_upper_bound_demo(const Graph& g, const Graph& h, int r,
                                             const std::vector<int>& n_grid, int trials,
                                             std::uint64_t seed) {
    std::vector<DemoRow> rows;
    Rng rng(seed);
    int k = h.vertex_count();
    for (int n : n_grid) {
        PartiteGraph host = blowup(g, n);
        for (int trial = 0; trial < trials; ++trial) {
            EdgeColoring coloring(host.g, r);
            for (int e = 0; e < coloring.edge_count(); ++e)
                coloring.set_color(e, 1 + rng.below_int(r));
            auto red = souza_reduction(coloring, g, h, r, n);

            // Monochromatic cylinder: the selected color restricted to the
            // parts hosting the copy of H.
            Graph selected = coloring.color_class(red.color);
            std::vector<std::vector<int>> parts(k);
            for (int i = 0; i < k; ++i) {
                parts[i].resize(n);
                std::iota(parts[i].begin(), parts[i].end(), red.parts[i] * n);
            }
            PartiteGraph cylinder(selected, parts);
            auto emb = find_blowup_greedy(cylinder, h);
            double t_ref = 0;
            if (emb.p12 > 0 && emb.p12 < 1)
                t_ref = emb.target_formula_t;
            rows.push_back({n, trial, emb.achieved_t, t_ref});
        }
    }
    return rows;
}

} // namespace br
