#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "test_util.hpp"
#include "turan/decomposition.hpp"
#include "turan/graph.hpp"
#include "turan/packing.hpp"

using namespace turan;
using testutil::make_path;
using testutil::random_graph;

namespace {

// Independent oracle: maximum leftover edge count over all (k-1)-packings,
// found by plain recursion over center-labelled paths. Returns -1 when no
// (k-1)-packing exists.
int brute_best_leftover(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<std::array<int, 3>> paths;  // (center, end, end)
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (x == y || !g.adjacent(x, y)) continue;
            for (int z = x + 1; z < n; ++z)
                if (z != y && g.adjacent(y, z)) paths.push_back({y, x, z});
        }
    int best = -1;
    std::vector<bool> used(n, false);
    auto leftover = [&]() {
        int e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!used[u] && !used[v] && g.adjacent(u, v)) ++e;
        return e;
    };
    std::function<void(int, int)> rec = [&](int from, int placed) {
        if (placed == k - 1) {
            best = std::max(best, leftover());
            return;
        }
        for (std::size_t i = from; i < paths.size(); ++i) {
            auto [y, x, z] = paths[i];
            if (used[x] || used[y] || used[z]) continue;
            used[x] = used[y] = used[z] = true;
            rec(i + 1, placed + 1);
            used[x] = used[y] = used[z] = false;
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace

TEST_CASE("best decomposition of the clique-plus-matching graph") {
    Graph g = disjoint_union(make_complete(5), make_matching(4));
    auto w = best_leftover_decomposition(g, 2);
    REQUIRE(w.has_value());
    CHECK(w->paths == std::vector<PathTriple>{{0, 1, 2}});  // lexicographically least
    CHECK(w->leftover_edge_count() == 3);
    CHECK(w->leftover_edges == std::vector<std::pair<int, int>>{{3, 4}, {5, 6}, {7, 8}});
    CHECK(w->isolated_vertices.empty());
    CHECK(w->shape_ok);
    CHECK(brute_best_leftover(g, 2) == 3);
}

TEST_CASE("k = 1 keeps the whole graph as leftover") {
    Graph g = disjoint_union(make_path(3), make_matching(2));
    auto w = best_leftover_decomposition(g, 1);
    REQUIRE(w.has_value());
    CHECK(w->paths.empty());
    CHECK(w->leftover_edge_count() == 3);
    CHECK_FALSE(w->shape_ok);  // the three-vertex component breaks the shape law
}

TEST_CASE("absent when no packing exists") {
    CHECK_FALSE(best_leftover_decomposition(make_matching(9), 2).has_value());
    CHECK_THROWS_AS(best_leftover_decomposition(make_complete(13), 2), std::invalid_argument);
    CHECK_THROWS_AS(best_leftover_decomposition(make_complete(3), 0), std::invalid_argument);
}

TEST_CASE("leftover edge count matches the brute-force oracle") {
    std::mt19937 rng(17);
    for (int it = 0; it < 250; ++it) {
        int n = 4 + it % 6;
        int k = 2 + it % 2;
        Graph g = random_graph(rng, n, (it % 4) * 0.2 + 0.2);
        int oracle = brute_best_leftover(g, k);
        auto w = best_leftover_decomposition(g, k);
        if (oracle < 0) {
            REQUIRE_FALSE(w.has_value());
            continue;
        }
        REQUIRE(w.has_value());
        REQUIRE(w->leftover_edge_count() == oracle);
        REQUIRE(verify_packing(g, w->paths));
        // leftover data is consistent with the actual leftover graph
        std::vector<bool> used(n, false);
        for (const PathTriple& t : w->paths) used[t.x] = used[t.y] = used[t.z] = true;
        int edges = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!used[u] && !used[v] && g.adjacent(u, v)) ++edges;
        REQUIRE(edges == w->leftover_edge_count());
    }
}

TEST_CASE("shape law under freeness") {
    // when the host contains no k-packing, every leftover component has at
    // most two vertices
    std::mt19937 rng(23);
    int seen = 0;
    for (int it = 0; it < 600 && seen < 120; ++it) {
        int n = 6 + it % 3;
        int k = 2 + it % 2;
        Graph g = random_graph(rng, n, 0.25);
        if (contains_k_p3(g, k)) continue;
        auto w = best_leftover_decomposition(g, k);
        if (!w) continue;
        ++seen;
        REQUIRE(w->shape_ok);
        REQUIRE(3 * (k - 1) + 2 * w->leftover_edge_count() +
                    static_cast<int>(w->isolated_vertices.size()) ==
                n);
    }
    REQUIRE(seen >= 50);
}

TEST_CASE("edgeless lemma holds on the star") {
    Graph star = join(make_complete(1), Graph(8));
    auto w = best_leftover_decomposition(star, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->leftover_edge_count() == 0);
    REQUIRE(w->isolated_vertices.size() == 6);
    LemmaReport report = check_lemma_edgeless(star, 2, *w);
    CHECK(report.holds);
    CHECK(report.violations.empty());
}

TEST_CASE("edgeless lemma rejects two leftovers hitting an endpoint") {
    // path 0-1-2 plus leftovers 3, 4 pinned to endpoint 0 and an isolated 5;
    // a graph like this admits a better H, so the explicit witness is the
    // only way to reach the checker with this shape
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
    CHECK_FALSE(contains_k_p3(g, 2).has_value());
    DecompositionWitness w;
    w.paths = {{0, 1, 2}};
    w.isolated_vertices = {3, 4, 5};
    LemmaReport report = check_lemma_edgeless(g, 2, w);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].triple_index == 0);

    // shape preconditions are enforced
    DecompositionWitness empty_witness;
    CHECK_THROWS_AS(check_lemma_edgeless(make_matching(9), 2, empty_witness), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_one_edge(g, 2, w), std::invalid_argument);  // s = 0, not 1
}

TEST_CASE("subset bound via sorted cross degrees equals explicit enumeration") {
    // the edgeless checker evaluates "every p-subset sends at most p edges"
    // through prefix sums of sorted per-vertex cross degrees; confirm the
    // equivalence against direct subset enumeration for t <= 6
    std::mt19937 rng(47);
    int tested = 0;
    for (int it = 0; it < 4000 && tested < 400; ++it) {
        int t = 3 + it % 4;
        int n = 3 + t;
        std::vector<Graph::Edge> edges{{0, 1}, {1, 2}};
        for (int w = 3; w < n; ++w)
            for (int u = 0; u < 3; ++u)
                if (rng() % 3 == 0) edges.emplace_back(u, w);
        Graph g(n, edges);
        DecompositionWitness w;
        w.paths = {{0, 1, 2}};
        for (int v = 3; v < n; ++v) w.isolated_vertices.push_back(v);
        LemmaReport report = check_lemma_edgeless(g, 2, w);

        bool subset_ok = true;
        for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
            int p = std::popcount(mask);
            if (p < 3) continue;
            int cross = 0;
            for (int i = 0; i < t; ++i)
                if ((mask >> i) & 1)
                    for (int u = 0; u < 3; ++u)
                        if (g.adjacent(3 + i, u)) ++cross;
            if (cross > p) subset_ok = false;
        }
        bool pair_ok = true;
        std::vector<int> hitters;
        for (int v = 3; v < n; ++v)
            if (g.degree(v) > 0) hitters.push_back(v);
        if (hitters.size() >= 2)
            for (int v : hitters)
                if (!(g.adjacent(v, 1) && !g.adjacent(v, 0) && !g.adjacent(v, 2))) pair_ok = false;

        REQUIRE(report.holds == (subset_ok && pair_ok));
        ++tested;
    }
    REQUIRE(tested >= 400);
}

TEST_CASE("single-edge lemma holds on an optimal decomposition") {
    Graph g = disjoint_union(disjoint_union(make_path(3), make_matching(2)), Graph(2));
    CHECK_FALSE(contains_k_p3(g, 2).has_value());
    auto w = best_leftover_decomposition(g, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->leftover_edge_count() == 1);
    REQUIRE(w->isolated_vertices.size() == 2);
    LemmaReport report = check_lemma_one_edge(g, 2, *w);
    CHECK(report.holds);
}

TEST_CASE("single-edge lemma, five-cross case") {
    // pair {3,4} sends five edges into the path 0-1-2; isolated 5, 6 stay clear
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}});
    CHECK_FALSE(contains_k_p3(g, 2).has_value());
    auto w = best_leftover_decomposition(g, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->paths == std::vector<PathTriple>{{0, 1, 2}});
    REQUIRE(w->leftover_edge_count() == 1);
    LemmaReport report = check_lemma_one_edge(g, 2, *w);
    CHECK(report.holds);

    // wiring an isolated leftover to the path breaks the lemma's conclusion
    Graph bad = g.with_edge(5, 1);
    DecompositionWitness w2 = *w;
    LemmaReport report2 = check_lemma_one_edge(bad, 2, w2);
    CHECK_FALSE(report2.holds);
    REQUIRE(report2.violations.size() == 1);
    CHECK(report2.violations[0].vertices == std::vector<int>{5});
    CHECK(report2.violations[0].allowed == 0);
}

TEST_CASE("multi-edge lemma on the extremal families") {
    Graph g = disjoint_union(make_complete(5), make_matching(4));
    auto w = best_leftover_decomposition(g, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->leftover_edge_count() == 3);
    LemmaReport report = check_lemma_many_edges(g, 2, *w);
    CHECK(report.holds);

    Graph h = disjoint_union(make_complete(8), make_matching(2));
    auto wh = best_leftover_decomposition(h, 3);
    REQUIRE(wh.has_value());
    REQUIRE(wh->leftover_edge_count() == 2);
    LemmaReport report_h = check_lemma_many_edges(h, 3, *wh);
    CHECK(report_h.holds);
}

TEST_CASE("multi-edge lemma rejects a seven-edge quadruple") {
    // pairs {3,4} and {5,6} send 4 + 3 = 7 edges into the path 0-1-2
    Graph g = Graph::from_edges(7, {{0, 1},
                                    {1, 2},
                                    {3, 4},
                                    {5, 6},
                                    {3, 0},
                                    {3, 1},
                                    {4, 0},
                                    {4, 1},
                                    {5, 0},
                                    {5, 1},
                                    {5, 2}});
    DecompositionWitness w;
    w.paths = {{0, 1, 2}};
    w.leftover_edges = {{3, 4}, {5, 6}};
    LemmaReport report = check_lemma_many_edges(g, 2, w);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].observed == 7);
    CHECK(report.violations[0].allowed == 4);

    CHECK_THROWS_AS(check_lemma_many_edges(g, 2, DecompositionWitness{{{0, 1, 2}}, {{3, 4}}, {5, 6}, true}),
                    std::invalid_argument);  // s = 1, not >= 2
}
