#include "br/arrow.hpp"
#include "br/graph.hpp"
#include "br/robustness.hpp"
#include "br/subgraph.hpp"

#include <doctest.h>

using namespace br;

TEST_CASE("robustness of K_6 for triangles") {
    RobustnessReport rep = robustness_exact(complete_graph(6), complete_graph(3), 2);
    CHECK(rep.exact);
    CHECK(rep.beta == Fraction(1, 10));
    CHECK(rep.mono_count == 2);
    CHECK(rep.total_copies == 20);
    CHECK(rep.lemma_bound == Fraction(1, 10)); // 3 / (2 * 15), equality case

    // The argmin coloring really achieves the minimum count.
    int mono = 0;
    for (int c = 1; c <= 2; ++c) {
        Graph cls = rep.argmin_coloring.color_class(c);
        mono += static_cast<int>(enumerate_copies(cls, complete_graph(3)).size());
    }
    CHECK(mono == 2);
}

TEST_CASE("labeled counts scale by the automorphism group") {
    RobustnessReport unlabeled = robustness_exact(complete_graph(6), complete_graph(3), 2);
    RobustnessReport labeled = robustness_exact(complete_graph(6), complete_graph(3), 2,
                                                kDefaultBudget, true);
    CHECK(labeled.total_copies == 6 * unlabeled.total_copies); // |Aut(K_3)| = 6
    CHECK(labeled.mono_count == 6 * unlabeled.mono_count);
    CHECK(labeled.beta == unlabeled.beta);
}

TEST_CASE("robustness of C_5 for P_3") {
    RobustnessReport rep = robustness_exact(cycle_graph(5), path_graph(3), 2);
    CHECK(rep.exact);
    CHECK(rep.lemma_bound == Fraction(1, 5)); // 2 / (2 * 5)
    CHECK(rep.beta <= rep.lemma_bound);
    CHECK(rep.total_copies == 5);
    CHECK(rep.beta == Fraction(1, 5)); // one mono P_3 forced in any 2-coloring of C_5
}

TEST_CASE("beta is zero exactly when the arrow fails") {
    struct Inst { Graph g, h; };
    std::vector<Inst> insts = {
        {complete_graph(5), complete_graph(3)}, // refuted arrow
        {cycle_graph(4), path_graph(3)},        // refuted arrow
        {complete_graph(6), complete_graph(3)}, // proved arrow
        {star_graph(3), path_graph(3)},         // proved arrow
    };
    for (const auto& inst : insts) {
        bool arrowed = arrows(inst.g, inst.h, 2).verdict == Verdict::Proved;
        RobustnessReport rep = robustness_exact(inst.g, inst.h, 2);
        CHECK((rep.beta.num > 0) == arrowed);
    }
}

TEST_CASE("lemma_witness_coloring") {
    WitnessColoring w = lemma_witness_coloring(complete_graph(6), complete_graph(3), 2);
    CHECK(w.achieved <= Fraction(1, 10));
    RobustnessReport rep = robustness_exact(complete_graph(6), complete_graph(3), 2);
    CHECK(rep.beta <= w.achieved); // witness upper-bounds the true minimum

    WitnessColoring star = lemma_witness_coloring(star_graph(3), path_graph(3), 2);
    CHECK(star.achieved <= Fraction(1, 3)); // e(P_3) / (2 * 3)

    // Precondition: minimality required.
    CHECK_THROWS_AS(lemma_witness_coloring(complete_graph(7), complete_graph(3), 2),
                    std::invalid_argument);
}

TEST_CASE("minimal_family_scan") {
    // H = K_2: only K_2 itself is minimal.
    MinimalFamilyScan k2scan = minimal_family_scan(complete_graph(2), 2, 4);
    CHECK(k2scan.complete);
    REQUIRE(k2scan.minimal.size() == 1);
    CHECK(k2scan.minimal[0].isomorphic_to(complete_graph(2)));

    // H = P_3, bound 5: K_{1,3}, C_3, C_5.
    MinimalFamilyScan p3scan = minimal_family_scan(path_graph(3), 2, 5);
    CHECK(p3scan.complete);
    CHECK(p3scan.minimal.size() == 3);
    int hits = 0;
    for (const auto& g : p3scan.minimal) {
        if (g.isomorphic_to(star_graph(3))) ++hits;
        if (g.isomorphic_to(cycle_graph(3))) ++hits;
        if (g.isomorphic_to(cycle_graph(5))) ++hits;
    }
    CHECK(hits == 3);

    // Every minimal graph respects the lemma bound.
    for (const auto& g : p3scan.minimal) {
        RobustnessReport rep = robustness_exact(g, path_graph(3), 2);
        CHECK(rep.beta <= rep.lemma_bound);
    }

    // H = K_3, bound 6: exactly K_6 at this size.
    MinimalFamilyScan k3scan = minimal_family_scan(complete_graph(3), 2, 6);
    CHECK(k3scan.complete);
    REQUIRE(k3scan.minimal.size() == 1);
    CHECK(k3scan.minimal[0].isomorphic_to(complete_graph(6)));
}
