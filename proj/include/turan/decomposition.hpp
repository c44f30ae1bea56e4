#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

/// A (k-1)-packing H together with the component structure of G - V(H):
/// s leftover edges and t isolated vertices. When the host graph has no
/// k-packing every leftover component has at most two vertices; shape_ok
/// records whether that held (when it did not, leftover_edges still lists
/// every edge of G - V(H), so counts stay meaningful).
struct DecompositionWitness {
    std::vector<PathTriple> paths;
    std::vector<std::pair<int, int>> leftover_edges;  // ascending (u, v) pairs
    std::vector<int> isolated_vertices;               // ascending ids
    bool shape_ok = true;

    int leftover_edge_count() const { return static_cast<int>(leftover_edges.size()); }
};

/// Exhaustively enumerate every (k-1)-packing of g and return one that
/// maximises the edge count of the leftover graph; ties go to the
/// lexicographically least packing. Returns nullopt when g has no
/// (k-1)-packing. Exhaustive only at small orders: n(g) <= 12 is enforced.
std::optional<DecompositionWitness> best_leftover_decomposition(const Graph& g, int k);

enum class LemmaId {
    edgeless_leftover,     // leftover has no edge (s = 0, t >= 3)
    single_edge_leftover,  // exactly one leftover edge (s = 1, t >= 2)
    multi_edge_leftover,   // two or more leftover edges (s >= 2)
};

std::string_view lemma_name(LemmaId id);

struct LemmaViolation {
    int triple_index;           // which path of H, 0-based
    std::vector<int> vertices;  // leftover vertices of the offending clause
    int observed;
    int allowed;
};

struct LemmaReport {
    LemmaId id;
    bool holds = true;  // holds iff violations is empty
    std::vector<LemmaViolation> violations;
};

/// Leftover edgeless (s = 0, t >= 3): every p leftover vertices (3 <= p <= t)
/// send at most p edges to each path of H, and whenever two leftover
/// vertices both touch a path they touch only its center. The subset bound
/// is evaluated through sorted per-vertex cross degrees.
LemmaReport check_lemma_edgeless(const Graph& g, int k, const DecompositionWitness& w);

/// One leftover edge (s = 1, t >= 2): per path, at most 4 edges from the
/// edge pair plus any two isolated leftover vertices when the pair sends at
/// most 4; when the pair sends 5 or more (never above the trivial 6) no
/// isolated leftover vertex touches that path.
LemmaReport check_lemma_one_edge(const Graph& g, int k, const DecompositionWitness& w);

/// Several leftover edges (s >= 2), with the pair of maximum cross count
/// taken as the reference: quadruple bounds of 4 (reference maximum <= 4) or
/// 6 (reference maximum >= 5, in which case nothing else touches the
/// reference path and a quadruple reaching 6 gets all 6 from one pair).
LemmaReport check_lemma_many_edges(const Graph& g, int k, const DecompositionWitness& w);

}  // namespace turan
