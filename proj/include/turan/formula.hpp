#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Which case of the ex(n, k*P3) formula applies. The four intervals
/// partition all n >= 1 for every k >= 1.
enum class Regime {
    dense,     // n < 3k: complete graph, no room for k paths
    clique,    // 3k <= n < 5k-1: K_{3k-1} plus a matching wins
    boundary,  // n = 5k-1: both constructions tie
    hub,       // n > 5k-1: K_{k-1} joined to a matching wins
};

std::string_view regime_name(Regime r);

Regime regime(std::int64_t n, std::int64_t k);

/// Exact value of ex(n, k*P3). Pure 64-bit arithmetic, valid for n up to
/// around 2*10^9; no graphs are allocated.
std::int64_t ex_kp3(std::int64_t n, std::int64_t k);

/// floor((l-2)*n/2), the classical upper bound for ex(n, P_l). Requires
/// n >= l >= 2.
std::int64_t erdos_gallai_bound(std::int64_t n, std::int64_t l);

struct GorgolBounds {
    std::int64_t clique_side;  // e(K_{3k-1} u M_{n-3k+1})
    std::int64_t hub_side;     // e(K_{k-1} + M_{n-k+1})
};

/// Edge counts of the two classical lower-bound constructions. Requires
/// n >= 3k; the larger of the two always equals ex_kp3(n, k).
GorgolBounds gorgol_lower_bounds(std::int64_t n, std::int64_t k);

enum class ExtremalShape {
    complete,              // K_n
    clique_plus_matching,  // K_{3k-1} u M_{n-3k+1}
    hub_plus_matching,     // K_{k-1} + M_{n-k+1}
};

std::string shape_name(ExtremalShape s, std::int64_t n, std::int64_t k);

/// All extremal graphs for (n, k), as symbolic shapes plus realized Graph
/// values deduplicated up to isomorphism. Shapes are always returned in the
/// fixed order [clique side, hub side]; graphs are realized only when
/// n <= Graph::max_vertices and otherwise left empty.
struct ExtremalFamily {
    Regime regime;
    std::vector<ExtremalShape> shapes;
    std::vector<Graph> graphs;
    std::int64_t edge_target;  // ex_kp3(n, k); every realized graph has this many edges
};

ExtremalFamily extremal_graphs(std::int64_t n, std::int64_t k);

}  // namespace turan
