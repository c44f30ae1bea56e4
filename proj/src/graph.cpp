#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

int checked_order(int n) {
    if (n < 0 || n > Graph::max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    return n;
}

}  // namespace

Graph::Graph(int n)
    : n_(checked_order(n)), words_(n > 0 ? (n + 63) / 64 : 0), bits_(static_cast<std::size_t>(n_) * words_, 0) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (!adjacent(u, v)) {
            set_adjacent(u, v);
            ++edges_;
        }
    }
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

void Graph::set_adjacent(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::clear_adjacent(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v || adjacent(u, v)) throw std::invalid_argument("with_edge: not a new edge");
    Graph out = *this;
    out.set_adjacent(u, v);
    ++out.edges_;
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("without_edge: edge absent");
    Graph out = *this;
    out.clear_adjacent(u, v);
    --out.edges_;
    return out;
}

Graph Graph::relabel(std::span<const int> new_id) const {
    if (static_cast<int>(new_id.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
    std::vector<bool> hit(n_, false);
    for (int v = 0; v < n_; ++v) {
        int t = new_id[v];
        if (t < 0 || t >= n_ || hit[t]) throw std::invalid_argument("relabel: not a permutation");
        hit[t] = true;
    }
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) {
                out.set_adjacent(new_id[u], new_id[v]);
                ++out.edges_;
            }
    return out;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_adjacent(u, v);
    g.edges_ = n * (n - 1) / 2;
    return g;
}

Graph make_matching(int t) {
    Graph g(t);
    for (int v = 0; v + 1 < t; v += 2) g.set_adjacent(v, v + 1);
    g.edges_ = t / 2;
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = checked_order(g.vertex_count() + h.vertex_count());
    Graph out(n);
    int shift = g.vertex_count();
    for (auto [u, v] : g.edges()) out.set_adjacent(u, v);
    for (auto [u, v] : h.edges()) out.set_adjacent(u + shift, v + shift);
    out.edges_ = g.edge_count() + h.edge_count();
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    int shift = g.vertex_count();
    for (int u = 0; u < shift; ++u)
        for (int v = shift; v < out.vertex_count(); ++v) out.set_adjacent(u, v);
    out.edges_ += g.vertex_count() * h.vertex_count();
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> ids(s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: invalid vertex id");
        if (i > 0 && ids[i] == ids[i - 1])
            throw std::invalid_argument("induced_subgraph: duplicate vertex id");
    }
    Graph out(static_cast<int>(ids.size()));
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (g.adjacent(ids[a], ids[b])) {
                out.set_adjacent(static_cast<int>(a), static_cast<int>(b));
                ++out.edges_;
            }
    return out;
}

}  // namespace turan
