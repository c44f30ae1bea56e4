#pragma once

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// One path on three vertices: edges x-y and y-z, with y the center.
struct PathTriple {
    int x = -1;
    int y = -1;
    int z = -1;

    friend bool operator==(const PathTriple&, const PathTriple&) = default;
};

/// A set of pairwise vertex-disjoint path triples.
using Packing = std::vector<PathTriple>;

/// Certificate check: all triples use distinct vertices of g and both edges
/// of each triple exist. Vertex ids outside g throw.
bool verify_packing(const Graph& g, const Packing& p);

/// Deterministic maximal packing: repeatedly take the lowest-index vertex
/// with two available neighbours as a center, endpoints being its two lowest
/// available neighbours. No path on three vertices survives in the residual.
Packing greedy_packing(const Graph& g);

struct MaxPackingResult {
    int size = 0;
    Packing witness;
};

/// Exact maximum packing by branch and bound: branch on the lowest-index
/// vertex that still has an available neighbour (every triple through it as
/// center first, then as endpoint, neighbours ascending, then the branch
/// excluding it), seeded with the greedy packing. Exact at any order; sized
/// for exhaustive work up to a few dozen vertices.
MaxPackingResult max_p3_packing(const Graph& g);

/// Does g contain k disjoint paths on three vertices? Engages with a witness
/// of exactly k triples when it does; the search stops as soon as k triples
/// are found. k = 0 holds vacuously with an empty witness.
std::optional<Packing> contains_k_p3(const Graph& g, int k);

}  // namespace turan
