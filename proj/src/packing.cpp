#include "turan/packing.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace turan {

namespace {

// Fixed-capacity bitset covering Graph::max_vertices; keeps the solver free
// of heap traffic.
struct Bits {
    std::uint64_t w[Graph::max_vertices / 64] = {};
    int nw = 0;

    static Bits all(int n) {
        Bits b;
        b.nw = n > 0 ? (n + 63) / 64 : 0;
        for (int v = 0; v < n; ++v) b.set(v);
        return b;
    }
    bool test(int v) const { return (w[v / 64] >> (v % 64)) & 1; }
    void set(int v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
    void clear(int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    int count() const {
        int c = 0;
        for (int i = 0; i < nw; ++i) c += std::popcount(w[i]);
        return c;
    }
    int lowest() const {
        for (int i = 0; i < nw; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    bool any() const {
        for (int i = 0; i < nw; ++i)
            if (w[i]) return true;
        return false;
    }
};

Bits masked_row(const Graph& g, const Bits& mask, int v) {
    Bits r;
    r.nw = mask.nw;
    auto row = g.row(v);
    for (int i = 0; i < r.nw; ++i) r.w[i] = row[i] & mask.w[i];
    return r;
}

struct Solver {
    const Graph& g;
    int n;
    Bits avail;
    Packing current;
    Packing best;
    int target;   // early-exit threshold when hunting a fixed size
    bool hunt;    // true: stop at target and prune against it; false: exact maximum
    bool done = false;

    Solver(const Graph& graph, int stop_at, bool hunting)
        : g(graph), n(graph.vertex_count()), avail(Bits::all(n)), target(stop_at), hunt(hunting) {}

    // Admissible bound on the number of extra triples: per component, the
    // smaller of floor(size/3) and a greedy hitting set leaving maximum
    // degree one (every path on three vertices must use a hit vertex).
    int upper_bound() const {
        int total = 0;
        Bits left = avail;
        int comp[Graph::max_vertices];
        while (true) {
            int seed = left.lowest();
            if (seed < 0) break;
            int size = 0;
            Bits frontier;
            frontier.nw = left.nw;
            frontier.set(seed);
            Bits seen = frontier;
            while (true) {
                int v = frontier.lowest();
                if (v < 0) break;
                frontier.clear(v);
                comp[size++] = v;
                Bits nb = masked_row(g, left, v);
                for (int i = 0; i < nb.nw; ++i) {
                    std::uint64_t fresh = nb.w[i] & ~seen.w[i];
                    seen.w[i] |= fresh;
                    frontier.w[i] |= fresh;
                }
            }
            for (int i = 0; i < size; ++i) left.clear(comp[i]);
            if (size < 3) continue;
            int cover = cover_bound(comp, size);
            total += size / 3 < cover ? size / 3 : cover;
        }
        return total;
    }

    int cover_bound(const int* comp, int size) const {
        Bits rem;
        rem.nw = avail.nw;
        for (int i = 0; i < size; ++i) rem.set(comp[i]);
        int removed = 0;
        while (true) {
            int best_v = -1, best_d = 1;
            for (int i = 0; i < size; ++i) {
                int v = comp[i];
                if (!rem.test(v)) continue;
                int d = masked_row(g, rem, v).count();
                if (d > best_d) {
                    best_d = d;
                    best_v = v;
                }
            }
            if (best_v < 0) return removed;
            rem.clear(best_v);
            ++removed;
        }
    }

    void take(int x, int y, int z) {
        avail.clear(x);
        avail.clear(y);
        avail.clear(z);
        current.push_back({x, y, z});
        if (current.size() > best.size()) {
            best = current;
            if (hunt && static_cast<int>(best.size()) >= target) done = true;
        }
        if (!done) search();
        current.pop_back();
        avail.set(x);
        avail.set(y);
        avail.set(z);
    }

    void search() {
        if (done) return;
        int have = static_cast<int>(current.size());
        int limit = hunt ? target - 1 : static_cast<int>(best.size());
        if (have + upper_bound() <= limit) return;

        // lowest-index vertex that can still sit in a triple
        int v = -1;
        Bits nb;
        for (int u = avail.lowest(); u >= 0 && u < n; ++u) {
            if (!avail.test(u)) continue;
            nb = masked_row(g, avail, u);
            if (nb.any()) {
                v = u;
                break;
            }
        }
        if (v < 0) return;

        int nbs[Graph::max_vertices];
        int deg = 0;
        for (int u = 0; u < n; ++u)
            if (nb.test(u)) nbs[deg++] = u;

        // v as center
        for (int a = 0; a < deg && !done; ++a)
            for (int b = a + 1; b < deg && !done; ++b) take(nbs[a], v, nbs[b]);
        // v as endpoint
        for (int a = 0; a < deg && !done; ++a) {
            int y = nbs[a];
            Bits ynb = masked_row(g, avail, y);
            ynb.clear(v);
            for (int z = ynb.lowest(); z >= 0 && !done; z = ynb.lowest()) {
                ynb.clear(z);
                take(v, y, z);
            }
        }
        // v in no triple
        if (!done) {
            avail.clear(v);
            search();
            avail.set(v);
        }
    }
};

}  // namespace

bool verify_packing(const Graph& g, const Packing& p) {
    std::vector<bool> used(g.vertex_count(), false);
    for (const PathTriple& t : p) {
        for (int v : {t.x, t.y, t.z}) {
            if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("verify_packing: vertex id out of range");
            if (used[v]) return false;
            used[v] = true;
        }
        if (!g.adjacent(t.x, t.y) || !g.adjacent(t.y, t.z)) return false;
    }
    return true;
}

Packing greedy_packing(const Graph& g) {
    int n = g.vertex_count();
    Bits avail = Bits::all(n);
    Packing out;
    bool found = true;
    while (found) {
        found = false;
        for (int y = 0; y < n && !found; ++y) {
            if (!avail.test(y)) continue;
            Bits nb = masked_row(g, avail, y);
            if (nb.count() < 2) continue;
            int x = nb.lowest();
            nb.clear(x);
            int z = nb.lowest();
            out.push_back({x, y, z});
            avail.clear(x);
            avail.clear(y);
            avail.clear(z);
            found = true;
        }
    }
    return out;
}

MaxPackingResult max_p3_packing(const Graph& g) {
    if (g.vertex_count() < 3) return {};
    Solver solver(g, 0, false);
    solver.best = greedy_packing(g);
    solver.search();
    return {static_cast<int>(solver.best.size()), std::move(solver.best)};
}

std::optional<Packing> contains_k_p3(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("contains_k_p3: negative k");
    if (k == 0) return Packing{};
    if (3 * k > g.vertex_count()) return std::nullopt;
    Packing greedy = greedy_packing(g);
    if (static_cast<int>(greedy.size()) >= k) {
        greedy.resize(k);
        return greedy;
    }
    Solver solver(g, k, true);
    solver.search();
    if (static_cast<int>(solver.best.size()) >= k) return std::move(solver.best);
    return std::nullopt;
}

}  // namespace turan
