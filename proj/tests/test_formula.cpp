#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "turan/canonical.hpp"
#include "turan/formula.hpp"
#include "turan/packing.hpp"

using namespace turan;

TEST_CASE("regime classification") {
    CHECK(regime(5, 2) == Regime::dense);
    CHECK(regime(9, 2) == Regime::boundary);
    CHECK(regime(3, 1) == Regime::clique);
    CHECK(regime(6, 2) == Regime::clique);
    CHECK(regime(10, 2) == Regime::hub);
    CHECK_THROWS_AS(regime(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(regime(5, 0), std::invalid_argument);
}

TEST_CASE("regimes partition all n") {
    for (std::int64_t k = 1; k <= 40; ++k)
        for (std::int64_t n = 1; n <= 250; ++n) {
            int matches = (n < 3 * k ? 1 : 0) + (3 * k <= n && n < 5 * k - 1 ? 1 : 0) +
                          (n == 5 * k - 1 ? 1 : 0) + (n > 5 * k - 1 ? 1 : 0);
            REQUIRE(matches == 1);
        }
}

TEST_CASE("formula values") {
    CHECK(ex_kp3(9, 2) == 12);
    CHECK(ex_kp3(14, 3) == 31);
    CHECK(ex_kp3(5, 2) == 10);
    CHECK(ex_kp3(10, 2) == 13);
    CHECK(ex_kp3(1, 1) == 0);
    // k = 1 reduces to floor(n/2)
    for (int n = 4; n <= 60; ++n) CHECK(ex_kp3(n, 1) == n / 2);
}

TEST_CASE("formula matches the closed forms for two and three paths") {
    for (std::int64_t n = 9; n <= 2000; ++n) CHECK(ex_kp3(n, 2) == (n - 1) / 2 + n - 1);
    for (std::int64_t n = 14; n <= 2000; ++n) CHECK(ex_kp3(n, 3) == n / 2 + 2 * n - 4);
}

TEST_CASE("no overflow at large arguments") {
    CHECK(ex_kp3(1'000'000'000, 400'000'000) == 499999999500000000LL);  // dense: C(n,2)
    CHECK(ex_kp3(1'000'000'000, 1000) > 0);
    CHECK(regime(1'000'000'000, 1000) == Regime::hub);
}

TEST_CASE("erdos-gallai bound") {
    CHECK(erdos_gallai_bound(6, 3) == 3);
    CHECK(erdos_gallai_bound(4, 4) == 4);
    CHECK(erdos_gallai_bound(9, 3) == 4);
    CHECK(erdos_gallai_bound(9, 3) == ex_kp3(9, 1));
    CHECK_THROWS_AS(erdos_gallai_bound(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(erdos_gallai_bound(5, 1), std::invalid_argument);
}

TEST_CASE("gorgol lower bounds match explicit constructions") {
    CHECK(gorgol_lower_bounds(9, 2).clique_side == 12);
    CHECK(gorgol_lower_bounds(9, 2).hub_side == 12);
    CHECK(gorgol_lower_bounds(10, 2).clique_side == 12);
    CHECK(gorgol_lower_bounds(10, 2).hub_side == 13);
    // building both graphs is the oracle for the closed forms
    for (int k = 1; k <= 8; ++k)
        for (int n = 3 * k; n <= 60; ++n) {
            GorgolBounds lb = gorgol_lower_bounds(n, k);
            Graph clique_side = disjoint_union(make_complete(3 * k - 1), make_matching(n - 3 * k + 1));
            Graph hub_side = join(make_complete(k - 1), make_matching(n - k + 1));
            REQUIRE(lb.clique_side == clique_side.edge_count());
            REQUIRE(lb.hub_side == hub_side.edge_count());
        }
    GorgolBounds six_two = gorgol_lower_bounds(6, 2);
    CHECK(six_two.clique_side == 10);
    CHECK(six_two.hub_side == 7);
    CHECK_THROWS_AS(gorgol_lower_bounds(5, 2), std::invalid_argument);
}

TEST_CASE("the better construction attains the formula") {
    for (std::int64_t k = 1; k <= 50; ++k)
        for (std::int64_t n = 3 * k; n <= 3 * k + 400; ++n) {
            GorgolBounds lb = gorgol_lower_bounds(n, k);
            REQUIRE(ex_kp3(n, k) == std::max(lb.clique_side, lb.hub_side));
        }
    // sampled up to k = 1000 and n = 10^6
    for (std::int64_t k = 1; k <= 1000; k += 13)
        for (std::int64_t n = 3 * k; n <= 1000000; n = n * 2 + 5) {
            GorgolBounds lb = gorgol_lower_bounds(n, k);
            REQUIRE(ex_kp3(n, k) == std::max(lb.clique_side, lb.hub_side));
        }
}

TEST_CASE("clique and hub expressions agree at the boundary") {
    for (std::int64_t k = 1; k <= 1000; ++k) {
        std::int64_t n = 5 * k - 1;
        std::int64_t clique_expr = (3 * k - 1) * (3 * k - 2) / 2 + (n - 3 * k + 1) / 2;
        std::int64_t hub_expr = (k - 1) * (k - 2) / 2 + (n - k + 1) * (k - 1) + (n - k + 1) / 2;
        REQUIRE(clique_expr == hub_expr);
        REQUIRE(ex_kp3(n, k) == clique_expr);
        REQUIRE(ex_kp3(n, k) == (3 * k - 1) * (3 * k - 2) / 2 + k);
    }
}

TEST_CASE("extremal family shapes per regime") {
    ExtremalFamily dense = extremal_graphs(5, 2);
    REQUIRE(dense.shapes == std::vector<ExtremalShape>{ExtremalShape::complete});
    REQUIRE(dense.graphs.size() == 1);
    CHECK(dense.graphs[0] == make_complete(5));

    ExtremalFamily clique = extremal_graphs(6, 2);
    REQUIRE(clique.shapes == std::vector<ExtremalShape>{ExtremalShape::clique_plus_matching});
    REQUIRE(clique.graphs.size() == 1);
    CHECK(is_isomorphic(clique.graphs[0], disjoint_union(make_complete(5), make_matching(1))));
    CHECK(clique.graphs[0].edge_count() == 10);

    ExtremalFamily boundary = extremal_graphs(9, 2);
    REQUIRE(boundary.shapes.size() == 2);
    REQUIRE(boundary.graphs.size() == 2);
    CHECK(boundary.graphs[0].edge_count() == 12);
    CHECK(boundary.graphs[1].edge_count() == 12);
    CHECK_FALSE(is_isomorphic(boundary.graphs[0], boundary.graphs[1]));

    // the two boundary constructions coincide for k = 1 and dedup keeps one
    ExtremalFamily m4 = extremal_graphs(4, 1);
    REQUIRE(m4.shapes.size() == 2);
    REQUIRE(m4.graphs.size() == 1);
    CHECK(is_isomorphic(m4.graphs[0], make_matching(4)));

    ExtremalFamily hub = extremal_graphs(10, 2);
    REQUIRE(hub.shapes == std::vector<ExtremalShape>{ExtremalShape::hub_plus_matching});
    REQUIRE(hub.graphs.size() == 1);
    CHECK(hub.graphs[0].edge_count() == 13);
}

TEST_CASE("k = 1 extremal graphs are matchings") {
    for (int n = 4; n <= 30; ++n) {
        ExtremalFamily family = extremal_graphs(n, 1);
        REQUIRE(family.graphs.size() == 1);
        CHECK(is_isomorphic(family.graphs[0], make_matching(n)));
    }
}

TEST_CASE("every realized extremal graph hits the formula edge count") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 40; ++n) {
            ExtremalFamily family = extremal_graphs(n, k);
            REQUIRE_FALSE(family.graphs.empty());
            for (const Graph& g : family.graphs) REQUIRE(g.edge_count() == family.edge_target);
        }
}

TEST_CASE("oversized orders keep symbolic shapes only") {
    ExtremalFamily family = extremal_graphs(100000, 3);
    CHECK(family.graphs.empty());
    REQUIRE(family.shapes == std::vector<ExtremalShape>{ExtremalShape::hub_plus_matching});
    CHECK(shape_name(family.shapes[0], 100000, 3) == "K_2 + M_99998");
}

TEST_CASE("hub expression extends down to every n past 7k") {
    for (std::int64_t k = 1; k <= 100; ++k)
        for (std::int64_t n = 7 * k; n <= 7 * k + 99; ++n) {
            std::int64_t hub_expr = (k - 1) * (k - 2) / 2 + (n - k + 1) * (k - 1) + (n - k + 1) / 2;
            REQUIRE(ex_kp3(n, k) == hub_expr);
        }
}
