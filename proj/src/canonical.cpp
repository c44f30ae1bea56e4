#include "turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "turan/graph6.hpp"

namespace turan {

namespace {

// Individualize-and-refine search for the lexicographically least adjacency
// bit-string. Cells are kept in an order determined only by structure
// (split signatures), so the set of leaf orderings is the same for any
// labelling of the same graph. Automorphisms discovered at tying leaves
// prune branches whose subtrees are images of branches already explored.
class Canon {
public:
    explicit Canon(const Graph& g)
        : n_(g.vertex_count()),
          words_(g.words_per_row()),
          nbits_(n_ * (n_ - 1) / 2),
          nwords_((nbits_ + 63) / 64),
          rows_(static_cast<std::size_t>(n_) * words_) {
        for (int v = 0; v < n_; ++v) {
            auto r = g.row(v);
            std::copy(r.begin(), r.end(), rows_.begin() + static_cast<std::size_t>(v) * words_);
        }
    }

    std::vector<int> run() {
        std::vector<int> pos(n_);
        if (n_ == 0) return pos;
        Cells cells(1);
        cells[0].resize(n_);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        descend(std::move(cells));
        for (int i = 0; i < n_; ++i) pos[best_seq_[i]] = i;
        return pos;
    }

private:
    using Cells = std::vector<std::vector<int>>;
    static constexpr std::size_t kMaxGenerators = 4096;

    int n_;
    int words_;
    int nbits_;
    int nwords_;
    std::vector<std::uint64_t> rows_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_bits_;
    std::vector<int> best_seq_;  // position -> vertex
    std::vector<std::vector<int>> generators_;
    std::vector<int> path_;  // individualized vertices, root first

    // scratch, reused across refine rounds
    std::vector<std::uint64_t> cell_mask_;
    std::vector<int> sig_;
    std::vector<int> idx_;

    bool adj(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    // One split round groups every cell by its vector of neighbour counts
    // against the current cells; sub-cells are ordered by signature, members
    // ascending. Repeats until no cell splits, keeping the cell sequence
    // label-invariant.
    void refine(Cells& cells) {
        for (;;) {
            std::size_t ncells = cells.size();
            cell_mask_.assign(ncells * words_, 0);
            for (std::size_t c = 0; c < ncells; ++c)
                for (int v : cells[c])
                    cell_mask_[c * words_ + v / 64] |= std::uint64_t{1} << (v % 64);

            bool split_any = false;
            Cells next;
            next.reserve(ncells + 2);
            for (std::size_t c = 0; c < ncells; ++c) {
                std::size_t m = cells[c].size();
                if (m == 1) {
                    next.push_back(std::move(cells[c]));
                    continue;
                }
                sig_.assign(m * ncells, 0);
                for (std::size_t i = 0; i < m; ++i) {
                    const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(cells[c][i]) * words_;
                    for (std::size_t d = 0; d < ncells; ++d) {
                        int cnt = 0;
                        for (int w = 0; w < words_; ++w)
                            cnt += std::popcount(row[w] & cell_mask_[d * words_ + w]);
                        sig_[i * ncells + d] = cnt;
                    }
                }
                // int-wise comparison keeps the sub-cell order portable
                auto sig_cmp = [&](int a, int b) {
                    const int* sa = sig_.data() + a * ncells;
                    const int* sb = sig_.data() + b * ncells;
                    for (std::size_t d = 0; d < ncells; ++d)
                        if (sa[d] != sb[d]) return sa[d] < sb[d] ? -1 : 1;
                    return 0;
                };
                idx_.resize(m);
                std::iota(idx_.begin(), idx_.end(), 0);
                std::sort(idx_.begin(), idx_.end(), [&](int a, int b) {
                    int cmp = sig_cmp(a, b);
                    if (cmp != 0) return cmp < 0;
                    return cells[c][a] < cells[c][b];
                });
                std::size_t b = 0;
                while (b < m) {
                    std::size_t e = b + 1;
                    while (e < m && sig_cmp(idx_[b], idx_[e]) == 0) ++e;
                    std::vector<int> sub;
                    sub.reserve(e - b);
                    for (std::size_t i = b; i < e; ++i) sub.push_back(cells[c][idx_[i]]);
                    next.push_back(std::move(sub));
                    b = e;
                }
            }
            split_any = next.size() != cells.size();
            cells = std::move(next);
            if (!split_any) return;
        }
    }

    static int bit_at(const std::vector<std::uint64_t>& bits, int pos) {
        return (bits[pos / 64] >> (63 - pos % 64)) & 1;
    }

    // -1 / 0 / +1: candidate prefix (first p fixed positions) versus best.
    int compare_prefix(const std::vector<int>& seq, int p) const {
        int pos = 0;
        for (int j = 1; j < p; ++j)
            for (int i = 0; i < j; ++i) {
                int b = adj(seq[i], seq[j]) ? 1 : 0;
                int bb = bit_at(best_bits_, pos);
                if (b != bb) return b < bb ? -1 : 1;
                ++pos;
            }
        return 0;
    }

    std::vector<std::uint64_t> build_bits(const std::vector<int>& seq) const {
        std::vector<std::uint64_t> bits(nwords_, 0);
        int pos = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (adj(seq[i], seq[j])) bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
                ++pos;
            }
        return bits;
    }

    void record_automorphism(const std::vector<int>& seq) {
        if (generators_.size() >= kMaxGenerators) return;
        std::vector<int> map(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            map[best_seq_[i]] = seq[i];
            identity = identity && best_seq_[i] == seq[i];
        }
        if (!identity) generators_.push_back(std::move(map));
    }

    // Orbit ids under the automorphisms that fix the whole individualized
    // path pointwise.
    void path_orbits(std::vector<int>& orbit) const {
        orbit.resize(n_);
        std::iota(orbit.begin(), orbit.end(), 0);
        auto find = [&](int v) {
            while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
            return v;
        };
        for (const auto& map : generators_) {
            bool fixes = true;
            for (int u : path_)
                if (map[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(map[v]);
                if (a != b) orbit[a] = b;
            }
        }
        for (int v = 0; v < n_; ++v) orbit[v] = find(v);
    }

    void descend(Cells cells) {
        refine(cells);

        std::vector<int> seq;
        seq.reserve(n_);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
            seq.push_back(cells[c][0]);
        }

        if (have_best_) {
            int cmp = compare_prefix(seq, static_cast<int>(seq.size()));
            if (cmp > 0) return;
        }

        if (target == cells.size()) {  // discrete partition
            auto bits = build_bits(seq);
            if (!have_best_ || bits < best_bits_) {
                best_bits_ = std::move(bits);
                best_seq_ = std::move(seq);
                have_best_ = true;
            } else if (bits == best_bits_) {
                record_automorphism(seq);
            }
            return;
        }

        std::vector<int> tried;
        std::vector<int> orbit;
        for (std::size_t i = 0; i < cells[target].size(); ++i) {
            int v = cells[target][i];
            // generators found in earlier branches may merge later
            // candidates, so orbits are recomputed per candidate
            path_orbits(orbit);
            bool seen = false;
            for (int u : tried)
                if (orbit[u] == orbit[v]) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[c].size() - 1);
                for (int u : cells[c])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            path_.push_back(v);
            descend(std::move(child));
            path_.pop_back();
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Canon(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return {encode_graph6(canonicalize(g))}; }

Graph canonicalize(const Graph& g) { return g.relabel(canonical_labeling(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(g.vertex_count()), dh(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.vertex_count(); ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace turan
