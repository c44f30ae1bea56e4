#pragma once

#include <compare>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Total-order key equal for two graphs exactly when they are isomorphic.
/// The bytes are the graph6 encoding of the canonically relabelled graph, so
/// a key can be decoded back into a representative graph.
struct CanonicalForm {
    std::string bytes;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labelling of g: returns pos where pos[v] is the position of v in
/// the canonical order. The order is the one whose adjacency bit-string
/// (upper triangle, column order) is lexicographically least among all
/// orders explored by equitable refinement plus backtracking.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Representative graph of g's isomorphism class (g relabelled canonically).
Graph canonicalize(const Graph& g);

/// Canonical-form equality with a cheap rejection pass on vertex count, edge
/// count and sorted degree sequence.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace turan
