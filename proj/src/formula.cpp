#include "turan/formula.hpp"

#include <stdexcept>
#include <string>

#include "turan/canonical.hpp"

namespace turan {

namespace {

std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

void check_positive(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
}

}  // namespace

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::dense: return "dense";
        case Regime::clique: return "clique";
        case Regime::boundary: return "boundary";
        case Regime::hub: return "hub";
    }
    return "?";
}

Regime regime(std::int64_t n, std::int64_t k) {
    check_positive(n, k);
    if (n < 3 * k) return Regime::dense;
    if (n < 5 * k - 1) return Regime::clique;
    if (n == 5 * k - 1) return Regime::boundary;
    return Regime::hub;
}

std::int64_t ex_kp3(std::int64_t n, std::int64_t k) {
    switch (regime(n, k)) {
        case Regime::dense: return choose2(n);
        case Regime::clique: return choose2(3 * k - 1) + (n - 3 * k + 1) / 2;
        case Regime::boundary: return choose2(3 * k - 1) + k;
        case Regime::hub: return choose2(k - 1) + (n - k + 1) * (k - 1) + (n - k + 1) / 2;
    }
    return 0;
}

std::int64_t erdos_gallai_bound(std::int64_t n, std::int64_t l) {
    if (l < 2 || n < l) throw std::invalid_argument("erdos_gallai_bound requires n >= l >= 2");
    return (l - 2) * n / 2;
}

GorgolBounds gorgol_lower_bounds(std::int64_t n, std::int64_t k) {
    check_positive(n, k);
    if (n < 3 * k) throw std::invalid_argument("gorgol_lower_bounds requires n >= 3k");
    std::int64_t m = n - k + 1;
    return {choose2(3 * k - 1) + (n - 3 * k + 1) / 2, choose2(k - 1) + (k - 1) * m + m / 2};
}

std::string shape_name(ExtremalShape s, std::int64_t n, std::int64_t k) {
    switch (s) {
        case ExtremalShape::complete: return "K_" + std::to_string(n);
        case ExtremalShape::clique_plus_matching:
            return "K_" + std::to_string(3 * k - 1) + " u M_" + std::to_string(n - 3 * k + 1);
        case ExtremalShape::hub_plus_matching:
            return "K_" + std::to_string(k - 1) + " + M_" + std::to_string(n - k + 1);
    }
    return "?";
}

ExtremalFamily extremal_graphs(std::int64_t n, std::int64_t k) {
    ExtremalFamily family;
    family.regime = regime(n, k);
    family.edge_target = ex_kp3(n, k);
    switch (family.regime) {
        case Regime::dense: family.shapes = {ExtremalShape::complete}; break;
        case Regime::clique: family.shapes = {ExtremalShape::clique_plus_matching}; break;
        case Regime::boundary:
            family.shapes = {ExtremalShape::clique_plus_matching, ExtremalShape::hub_plus_matching};
            break;
        case Regime::hub: family.shapes = {ExtremalShape::hub_plus_matching}; break;
    }
    if (n > Graph::max_vertices) return family;  // symbolic shapes only

    int ni = static_cast<int>(n), ki = static_cast<int>(k);
    for (ExtremalShape s : family.shapes) {
        Graph g;
        switch (s) {
            case ExtremalShape::complete: g = make_complete(ni); break;
            case ExtremalShape::clique_plus_matching:
                g = disjoint_union(make_complete(3 * ki - 1), make_matching(ni - 3 * ki + 1));
                break;
            case ExtremalShape::hub_plus_matching:
                g = join(make_complete(ki - 1), make_matching(ni - ki + 1));
                break;
        }
        bool dup = false;
        for (const Graph& seen : family.graphs)
            if (is_isomorphic(seen, g)) {
                dup = true;
                break;
            }
        if (!dup) family.graphs.push_back(std::move(g));
    }
    return family;
}

}  // namespace turan
