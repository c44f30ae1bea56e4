#include "turan/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace turan {

namespace {

constexpr int kExhaustiveLimit = 12;

// All paths on three vertices of g as normalized triples (x < z), in
// lexicographic (x, y, z) order.
std::vector<PathTriple> all_triples(const Graph& g) {
    std::vector<PathTriple> out;
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x || !g.adjacent(x, y)) continue;
            for (int z = x + 1; z < n; ++z) {
                if (z == y || !g.adjacent(y, z)) continue;
                out.push_back({x, y, z});
            }
        }
    std::sort(out.begin(), out.end(), [](const PathTriple& a, const PathTriple& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    return out;
}

struct PackingScan {
    const Graph& g;
    const std::vector<PathTriple>& triples;
    int want;  // k-1
    std::vector<int> chosen;
    std::uint32_t used = 0;

    int best_edges = -1;
    std::vector<int> best;

    int leftover_edges() const {
        int e = 0, n = g.vertex_count();
        for (int u = 0; u < n; ++u) {
            if (used & (1u << u)) continue;
            for (int v = u + 1; v < n; ++v)
                if (!(used & (1u << v)) && g.adjacent(u, v)) ++e;
        }
        return e;
    }

    void run(int from) {
        if (static_cast<int>(chosen.size()) == want) {
            int e = leftover_edges();
            if (e > best_edges) {  // strict: first maximiser is the lexicographically least
                best_edges = e;
                best = chosen;
            }
            return;
        }
        for (int i = from; i < static_cast<int>(triples.size()); ++i) {
            const PathTriple& t = triples[i];
            std::uint32_t mask = (1u << t.x) | (1u << t.y) | (1u << t.z);
            if (used & mask) continue;
            used |= mask;
            chosen.push_back(i);
            run(i + 1);
            chosen.pop_back();
            used &= ~mask;
        }
    }
};

int cross_edges(const Graph& g, std::initializer_list<int> side, const PathTriple& t) {
    int c = 0;
    for (int v : side)
        for (int u : {t.x, t.y, t.z})
            if (g.adjacent(v, u)) ++c;
    return c;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// The checkers reason from the witness's component structure, so it has to
// really be one: paths a packing, leftover pairs actual edges, and no
// leftover adjacency beyond the listed pairs.
void check_witness(const Graph& g, int k, const DecompositionWitness& w) {
    require(k >= 2, "lemma check requires k >= 2");
    require(static_cast<int>(w.paths.size()) == k - 1, "witness path count must be k-1");
    require(verify_packing(g, w.paths), "witness paths are not a packing of g");

    int n = g.vertex_count();
    std::vector<int> role(n, 0);  // 0 untouched, 1 path, 2 leftover
    for (const PathTriple& t : w.paths) role[t.x] = role[t.y] = role[t.z] = 1;
    auto claim_leftover = [&](int v) {
        require(v >= 0 && v < n && role[v] == 0, "witness leftover vertices must be distinct and off the paths");
        role[v] = 2;
    };
    for (auto [u, v] : w.leftover_edges) {
        claim_leftover(u);
        claim_leftover(v);
        require(g.adjacent(u, v), "witness leftover pair is not an edge");
    }
    for (int v : w.isolated_vertices) claim_leftover(v);
    require(3 * (k - 1) + 2 * w.leftover_edge_count() + static_cast<int>(w.isolated_vertices.size()) == n,
            "witness does not cover the graph");
    for (int u = 0; u < n; ++u) {
        if (role[u] != 2) continue;
        for (int v = u + 1; v < n; ++v) {
            if (role[v] != 2 || !g.adjacent(u, v)) continue;
            bool listed = false;
            for (auto e : w.leftover_edges)
                listed = listed || (e.first == u && e.second == v) || (e.first == v && e.second == u);
            require(listed, "leftover vertices carry an unlisted edge");
        }
    }
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::edgeless_leftover: return "edgeless-leftover";
        case LemmaId::single_edge_leftover: return "single-edge-leftover";
        case LemmaId::multi_edge_leftover: return "multi-edge-leftover";
    }
    return "?";
}

std::optional<DecompositionWitness> best_leftover_decomposition(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("best_leftover_decomposition: k must be positive");
    if (g.vertex_count() > kExhaustiveLimit)
        throw std::invalid_argument("best_leftover_decomposition: instance too large for exhaustive mode");

    std::vector<PathTriple> triples = all_triples(g);
    std::vector<PathTriple> chosen_paths;
    std::uint32_t used = 0;
    if (k - 1 > 0) {
        PackingScan scan{g, triples, k - 1};
        scan.run(0);
        if (scan.best_edges < 0) return std::nullopt;
        for (int i : scan.best) {
            chosen_paths.push_back(triples[i]);
            used |= (1u << triples[i].x) | (1u << triples[i].y) | (1u << triples[i].z);
        }
    }

    DecompositionWitness w;
    w.paths = std::move(chosen_paths);

    // component structure of the leftover graph
    int n = g.vertex_count();
    std::vector<int> comp_of(n, -1);
    for (int seed = 0; seed < n; ++seed) {
        if ((used & (1u << seed)) || comp_of[seed] >= 0) continue;
        std::vector<int> comp{seed};
        comp_of[seed] = seed;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int v = 0; v < n; ++v) {
                if ((used & (1u << v)) || comp_of[v] >= 0 || !g.adjacent(comp[head], v)) continue;
                comp_of[v] = seed;
                comp.push_back(v);
            }
        if (comp.size() == 1) {
            w.isolated_vertices.push_back(seed);
        } else if (comp.size() > 2) {
            w.shape_ok = false;
        }
    }
    for (int u = 0; u < n; ++u) {
        if (used & (1u << u)) continue;
        for (int v = u + 1; v < n; ++v)
            if (!(used & (1u << v)) && g.adjacent(u, v)) w.leftover_edges.emplace_back(u, v);
    }
    return w;
}

LemmaReport check_lemma_edgeless(const Graph& g, int k, const DecompositionWitness& w) {
    check_witness(g, k, w);
    require(w.leftover_edge_count() == 0, "edgeless check requires s = 0");
    int t = static_cast<int>(w.isolated_vertices.size());
    require(t >= 3, "edgeless check requires t >= 3");

    LemmaReport report{LemmaId::edgeless_leftover};
    for (int j = 0; j < k - 1; ++j) {
        const PathTriple& triple = w.paths[j];
        std::vector<std::pair<int, int>> deg;  // (cross degree, vertex), descending
        for (int v : w.isolated_vertices) deg.emplace_back(cross_edges(g, {v}, triple), v);
        std::sort(deg.begin(), deg.end(), [](auto& a, auto& b) { return a > b; });

        int sum = deg[0].first + deg[1].first;
        for (int p = 3; p <= t; ++p) {
            sum += deg[p - 1].first;
            if (sum > p) {
                std::vector<int> vs;
                for (int i = 0; i < p; ++i) vs.push_back(deg[i].second);
                std::sort(vs.begin(), vs.end());
                report.violations.push_back({j, vs, sum, p});
            }
        }

        // two hitters of a path must both touch only its center
        std::vector<int> hitters;
        for (auto& [d, v] : deg)
            if (d > 0) hitters.push_back(v);
        if (hitters.size() >= 2) {
            for (int v : hitters) {
                bool center_only = g.adjacent(v, triple.y) && !g.adjacent(v, triple.x) && !g.adjacent(v, triple.z);
                if (!center_only)
                    report.violations.push_back({j, {v}, cross_edges(g, {v}, triple), 1});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

LemmaReport check_lemma_one_edge(const Graph& g, int k, const DecompositionWitness& w) {
    check_witness(g, k, w);
    require(w.leftover_edge_count() == 1, "single-edge check requires s = 1");
    int t = static_cast<int>(w.isolated_vertices.size());
    require(t >= 2, "single-edge check requires t >= 2");

    LemmaReport report{LemmaId::single_edge_leftover};
    auto [u1, v1] = w.leftover_edges[0];
    for (int j = 0; j < k - 1; ++j) {
        const PathTriple& triple = w.paths[j];
        int pair_cross = cross_edges(g, {u1, v1}, triple);
        if (pair_cross <= 4) {
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b) {
                    int wa = w.isolated_vertices[a], wb = w.isolated_vertices[b];
                    int q = pair_cross + cross_edges(g, {wa, wb}, triple);
                    if (q > 4) report.violations.push_back({j, {u1, v1, wa, wb}, q, 4});
                }
        } else {
            // pair_cross can never exceed the six possible pairs; the binding
            // clause is that no isolated leftover vertex touches this path
            for (int v : w.isolated_vertices) {
                int c = cross_edges(g, {v}, triple);
                if (c > 0) report.violations.push_back({j, {v}, c, 0});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

LemmaReport check_lemma_many_edges(const Graph& g, int k, const DecompositionWitness& w) {
    check_witness(g, k, w);
    int s = w.leftover_edge_count();
    require(s >= 2, "multi-edge check requires s >= 2");

    LemmaReport report{LemmaId::multi_edge_leftover};

    // reference pair and path: first attaining the maximum cross count
    int ref_pair = 0, ref_path = 0, max_cross = -1;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < k - 1; ++j) {
            int c = cross_edges(g, {w.leftover_edges[i].first, w.leftover_edges[i].second}, w.paths[j]);
            if (c > max_cross) {
                max_cross = c;
                ref_pair = i;
                ref_path = j;
            }
        }
    auto [u1, v1] = w.leftover_edges[ref_pair];

    for (int i = 0; i < s; ++i) {
        if (i == ref_pair) continue;
        auto [ui, vi] = w.leftover_edges[i];
        for (int j = 0; j < k - 1; ++j) {
            const PathTriple& triple = w.paths[j];
            int q = cross_edges(g, {u1, v1, ui, vi}, triple);
            if (max_cross <= 4) {
                if (q > 4) report.violations.push_back({j, {u1, v1, ui, vi}, q, 4});
            } else {
                if (q > 6) report.violations.push_back({j, {u1, v1, ui, vi}, q, 6});
                if (q == 6) {
                    int a = cross_edges(g, {u1, v1}, triple);
                    int b = cross_edges(g, {ui, vi}, triple);
                    // six edges must come entirely from one of the two pairs
                    if (!((a == 6 && b == 0) || (a == 0 && b == 6)))
                        report.violations.push_back({j, {u1, v1, ui, vi}, a < b ? a : b, 0});
                }
            }
        }
    }
    if (max_cross >= 5) {
        // nothing else in the leftover may touch the reference path
        const PathTriple& triple = w.paths[ref_path];
        auto flag_vertex = [&](int v) {
            int c = cross_edges(g, {v}, triple);
            if (c > 0) report.violations.push_back({ref_path, {v}, c, 0});
        };
        for (int i = 0; i < s; ++i) {
            if (i == ref_pair) continue;
            flag_vertex(w.leftover_edges[i].first);
            flag_vertex(w.leftover_edges[i].second);
        }
        for (int v : w.isolated_vertices) flag_vertex(v);
    }
    report.holds = report.violations.empty();
    return report;
}

}  // namespace turan
