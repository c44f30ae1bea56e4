#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

/// Simple undirected graph on the fixed vertex set {0, ..., n-1}.
///
/// Adjacency is stored as per-vertex bit rows in one flat buffer, so
/// neighbourhood intersections are single AND/popcount passes. Values are
/// immutable once built: every operation returns a new Graph, so instances
/// may be shared freely between threads.
class Graph {
public:
    static constexpr int max_vertices = 512;

    using Edge = std::pair<int, int>;

    Graph() = default;

    /// Edgeless graph on n vertices. Throws std::invalid_argument if n is
    /// negative or exceeds max_vertices.
    explicit Graph(int n);

    /// Graph on n vertices with the given edges. Loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    Graph(int n, std::span<const Edge> edges);

    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;

    /// Bit row of v: bit u set iff u is adjacent to v.
    std::span<const std::uint64_t> row(int v) const;
    int words_per_row() const { return words_; }

    /// Copy with the extra edge (u, v). Adding an existing edge is an error.
    Graph with_edge(int u, int v) const;
    /// Copy with the edge (u, v) removed. Removing a non-edge is an error.
    Graph without_edge(int u, int v) const;

    /// Copy with vertex v renamed to new_id[v]; new_id must be a permutation
    /// of 0..n-1.
    Graph relabel(std::span<const int> new_id) const;

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_complete(int n);
    friend Graph make_matching(int t);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph join(const Graph&, const Graph&);
    friend Graph induced_subgraph(const Graph&, std::span<const int>);
    friend Graph decode_graph6(std::string_view);

    void set_adjacent(int u, int v);
    void clear_adjacent(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;  // n_ rows of words_ words each
};

/// Complete graph K_n.
Graph make_complete(int n);

/// Matching graph M_t: floor(t/2) disjoint edges (0,1), (2,3), ... plus one
/// isolated vertex when t is odd.
Graph make_matching(int t);

/// Disjoint union; vertices of h are shifted by n(g).
Graph disjoint_union(const Graph& g, const Graph& h);

/// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced by the given vertices, relabelled 0..|s|-1 in ascending
/// order of the original ids. Duplicate or invalid ids are rejected.
Graph induced_subgraph(const Graph& g, std::span<const int> s);

}  // namespace turan
