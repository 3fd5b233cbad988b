#include "br/graph.hpp"
#include "br/nikiforov.hpp"
#include "br/partite.hpp"

#include <doctest.h>

#include <cmath>

using namespace br;

TEST_CASE("lambda_reference") {
    // eta = 0.01, eH = 3: 0.01^(2/3) / (5 ln 100).
    CHECK(lambda_reference(0.01, 3) == doctest::Approx(0.00201581641770178).epsilon(1e-12));

    CHECK_THROWS_AS(lambda_reference(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(lambda_reference(std::exp(-1.0), 3), std::invalid_argument);
    CHECK_THROWS_AS(lambda_reference(0.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(lambda_reference(0.1, 0), std::invalid_argument);

    // Increasing in eta for fixed eH.
    double prev = 0;
    for (double eta = 0.01; eta < 0.36; eta += 0.02) {
        double lam = lambda_reference(eta, 3);
        CHECK(lam > prev);
        prev = lam;
    }
}

TEST_CASE("souza_b_reference") {
    // r=2, eH=3, gamma -> 0: b -> 2^4 = 16.
    SouzaB near16 = souza_b_reference(2, 3, 1e-9);
    CHECK(near16.value == doctest::Approx(16.0).epsilon(1e-6));
    CHECK(!near16.gamma_warning);

    // eH = 1: exponent (r+gamma)^0 = 1, b = r.
    CHECK(souza_b_reference(2, 1, 0.01).value == doctest::Approx(2.0));

    // log2(b) at r=2, eH=3, gamma=0.1 equals 2.1^2 = 4.41.
    SouzaB b = souza_b_reference(2, 3, 0.1);
    CHECK(b.log_value / std::log(2.0) == doctest::Approx(4.41));

    // gamma outside (0, 1/r) warns but computes.
    CHECK(souza_b_reference(2, 3, 0.6).gamma_warning);
    CHECK(!souza_b_reference(2, 3, 0.4).gamma_warning);
    CHECK_THROWS_AS(souza_b_reference(2, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(souza_b_reference(1, 3, 0.1), std::invalid_argument);

    // Large exponents stay finite in log space.
    SouzaB huge = souza_b_reference(3, 8, 0.01);
    CHECK(std::isfinite(huge.log_value));
    CHECK(std::isinf(huge.value));
}

TEST_CASE("derived parameter block") {
    NikiforovParams params{0.1, 3, 3};
    CHECK(params.alpha() == doctest::Approx(std::pow(0.1, 9)));
    CHECK(params.epsilon_dlr() == doctest::Approx(std::pow(0.1, 18) / 72.0));
    CHECK(params.lambda() == doctest::Approx(lambda_reference(0.1, 3)));
}

TEST_CASE("find_blowup_in_dense") {
    Graph k3 = complete_graph(3);

    // Dense instance: K_6 holds plenty of triangles.
    DenseBlowupReport rep = find_blowup_in_dense(complete_graph(6), k3, 0.01, 8, 7);
    CHECK(!rep.refused);
    CHECK(rep.embedding.achieved_t >= 1);
    CHECK(verify_embedding(rep.embedding.certificate, rep.parts, k3,
                           rep.embedding.achieved_t).ok);

    // Complete graph: achieved t = floor(n/3) under the natural partition.
    DenseBlowupReport k9 = find_blowup_in_dense(complete_graph(9), k3, 0.01, 16, 3);
    CHECK(!k9.refused);
    CHECK(k9.embedding.achieved_t == 3);

    // Triangle-free instance refuses on measured density.
    DenseBlowupReport refusal = find_blowup_in_dense(complete_bipartite(4, 4), k3, 0.01, 4, 1);
    CHECK(refusal.refused);
    CHECK(refusal.labeled_copies == 0);
}

TEST_CASE("souza_reduction") {
    Graph k6 = complete_graph(6), k3 = complete_graph(3);
    int n = 2;
    PartiteGraph host = blowup(k6, n);

    // Monochromatic host: color 1 wins everywhere.
    EdgeColoring mono(host.g, 2);
    for (int e = 0; e < mono.edge_count(); ++e) mono.set_color(e, 1);
    PopularColorReduction red = souza_reduction(mono, k6, k3, 2, n);
    CHECK(red.color == 1);
    CHECK(red.parts.size() == 3);
    for (double d : red.pair_densities) CHECK(d == doctest::Approx(1.0));

    // Random host colorings: selected-color pair densities >= 1/2 by pigeonhole.
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        EdgeColoring c(host.g, 2);
        for (int e = 0; e < c.edge_count(); ++e) c.set_color(e, 1 + rng.below_int(2));
        PopularColorReduction r = souza_reduction(c, k6, k3, 2, n);
        CHECK(r.color >= 1);
        for (double d : r.pair_densities) CHECK(d >= 0.5 - 1e-12);
        // The returned copy is a real triangle in the popular coloring's class.
        Graph cls = r.popular.color_class(r.color);
        for (auto [i, j] : k3.edges())
            CHECK(cls.has_edge(r.copy.host[i], r.copy.host[j]));
    }
}

TEST_CASE("blowup_upper_bound_demo") {
    Graph k6 = complete_graph(6), k3 = complete_graph(3);
    auto rows = blowup_upper_bound_demo(k6, k3, 2, {2, 4}, 3, 99);
    CHECK(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.t_achieved >= 0);
        CHECK(row.t_achieved <= row.n);
    }
    // Determinism: identical seed reproduces the table.
    auto again = blowup_upper_bound_demo(k6, k3, 2, {2, 4}, 3, 99);
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].t_achieved == rows[i].t_achieved);
        CHECK(again[i].t_reference == rows[i].t_reference);
    }
}
