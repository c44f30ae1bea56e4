#include "turan/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "turan/formula.hpp"
#include "turan/graph6.hpp"
#include "turan/packing.hpp"

namespace turan {

namespace {

constexpr int kEnumerateLimit = 10;
constexpr int kCountLimit = 9;

struct Child {
    Graph graph;
    CanonicalForm form;
};

// Accepted free children of one parent class representative. Acceptance is
// the canonical-construction-path rule: the new edge's class must be the
// one whose canonical deletion edge leads back to this parent. Each child
// class is considered once per parent (same-class augmentations collapse).
std::vector<Child> accepted_children(const Graph& parent, const CanonicalForm& parent_form, int k) {
    std::vector<Child> out;
    std::set<std::string> tried;
    int n = parent.vertex_count();
    std::vector<int> parent_degrees(n);
    for (int v = 0; v < n; ++v) parent_degrees[v] = parent.degree(v);
    std::sort(parent_degrees.begin(), parent_degrees.end());
    std::vector<int> back_degrees(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (parent.adjacent(u, v)) continue;
            Graph child = parent.with_edge(u, v);
            std::vector<int> pos = canonical_labeling(child);
            Graph canon = child.relabel(pos);
            std::string form = encode_graph6(canon);
            if (!tried.insert(form).second) continue;

            // canonical deletion edge: the edge of the canonical relabelling
            // at the greatest column-order position, pulled back to child
            int da = -1, db = -1;
            for (int b = n - 1; b >= 1 && da < 0; --b)
                for (int a = b - 1; a >= 0; --a)
                    if (canon.adjacent(a, b)) {
                        da = a;
                        db = b;
                        break;
                    }
            std::vector<int> inv(n);
            for (int w = 0; w < n; ++w) inv[pos[w]] = w;
            Graph back = child.without_edge(inv[da], inv[db]);
            // cheap isomorphism filter before the second canonical form
            for (int w = 0; w < n; ++w) back_degrees[w] = back.degree(w);
            std::sort(back_degrees.begin(), back_degrees.end());
            if (back_degrees != parent_degrees) continue;
            if (canonical_form(back).bytes != parent_form.bytes) continue;

            if (contains_k_p3(child, k)) continue;  // monotone: prunes the subtree
            out.push_back({std::move(child), CanonicalForm{std::move(form)}});
        }
    }
    return out;
}

void expand(const Graph& parent, const CanonicalForm& parent_form, int k,
            const std::function<void(const Graph&, const CanonicalForm&)>& visit) {
    for (Child& c : accepted_children(parent, parent_form, k)) {
        visit(c.graph, c.form);
        expand(c.graph, c.form, k, visit);
    }
}

void check_enumerate_args(int n, int k, int limit) {
    if (n < 0 || n > limit) throw std::invalid_argument("enumeration limited to n <= " + std::to_string(limit));
    if (k < 1) throw std::invalid_argument("enumeration requires k >= 1");
}

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
}

struct ScanAccumulator {
    int observed_max = 0;
    std::set<std::string> extremal;
    std::uint64_t scanned = 0;

    void add(const Graph& g, const CanonicalForm& form) {
        ++scanned;
        if (g.edge_count() > observed_max) {
            observed_max = g.edge_count();
            extremal.clear();
        }
        if (g.edge_count() == observed_max) extremal.insert(form.bytes);
    }

    void merge(const ScanAccumulator& other) {
        scanned += other.scanned;
        if (other.observed_max > observed_max) {
            observed_max = other.observed_max;
            extremal = other.extremal;
        } else if (other.observed_max == observed_max) {
            extremal.insert(other.extremal.begin(), other.extremal.end());
        }
    }
};

}  // namespace

void enumerate_free_graphs(int n, int k,
                           const std::function<void(const Graph&, const CanonicalForm&)>& visit) {
    check_enumerate_args(n, k, kEnumerateLimit);
    Graph root(n);
    CanonicalForm root_form = canonical_form(root);
    visit(root, root_form);
    expand(root, root_form, k, visit);
}

std::uint64_t count_graphs(int n) {
    if (n < 0 || n > kCountLimit)
        throw std::invalid_argument("count_graphs limited to n <= " + std::to_string(kCountLimit));
    // with k this large no graph on n vertices is pruned
    int k = n / 3 + 1;
    std::uint64_t count = 0;
    enumerate_free_graphs(n, k, [&](const Graph&, const CanonicalForm&) { ++count; });
    return count;
}

VerificationReport verify_turan(int n, int k, int jobs) {
    auto start = std::chrono::steady_clock::now();
    check_enumerate_args(n, k, kEnumerateLimit);
    if (n < 1) throw std::invalid_argument("verify_turan requires n >= 1");

    ScanAccumulator acc;
    if (jobs <= 1) {
        enumerate_free_graphs(n, k, [&](const Graph& g, const CanonicalForm& f) { acc.add(g, f); });
    } else {
        // grow the frontier until there is enough independent work; every
        // graph above the frontier is scanned serially exactly once
        std::vector<Child> frontier;
        Graph root(n);
        CanonicalForm root_form = canonical_form(root);
        acc.add(root, root_form);
        frontier.push_back({std::move(root), std::move(root_form)});
        std::size_t want = std::max<std::size_t>(64, static_cast<std::size_t>(4) * jobs);
        while (!frontier.empty() && frontier.size() < want) {
            std::vector<Child> next;
            for (const Child& c : frontier)
                for (Child& grand : accepted_children(c.graph, c.form, k)) {
                    acc.add(grand.graph, grand.form);
                    next.push_back(std::move(grand));
                }
            frontier = std::move(next);
        }
        std::mutex merge_mutex;
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            ScanAccumulator local;
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= frontier.size()) break;
                expand(frontier[i].graph, frontier[i].form, k,
                       [&](const Graph& g, const CanonicalForm& f) { local.add(g, f); });
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            acc.merge(local);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    VerificationReport report;
    report.n = n;
    report.k = k;
    report.formula_value = ex_kp3(n, k);
    report.observed_max = acc.observed_max;
    for (const std::string& s : acc.extremal) report.extremal_forms.push_back({s});
    report.graphs_scanned = acc.scanned;

    ExtremalFamily family = extremal_graphs(n, k);
    for (const Graph& g : family.graphs) report.expected_forms.push_back(canonical_form(g));
    std::sort(report.expected_forms.begin(), report.expected_forms.end());

    report.agree = report.formula_value == report.observed_max && report.extremal_forms == report.expected_forms;
    report.elapsed_ms = ms_since(start);
    return report;
}

LemmaSweepReport verify_lemmas(int n, int k) {
    auto start = std::chrono::steady_clock::now();
    if (n < 1 || n > 8) throw std::invalid_argument("verify_lemmas requires 1 <= n <= 8");
    if (k != 2 && k != 3) throw std::invalid_argument("verify_lemmas requires k in {2, 3}");

    LemmaSweepReport report;
    report.n = n;
    report.k = k;

    enumerate_free_graphs(n, k, [&](const Graph& g, const CanonicalForm& form) {
        ++report.graphs_scanned;
        auto witness = best_leftover_decomposition(g, k);
        if (!witness) return;  // no (k-1)-packing: the lemmas do not speak
        ++report.applicable;

        int s = witness->leftover_edge_count();
        int t = static_cast<int>(witness->isolated_vertices.size());
        LemmaReport result;
        if (s == 0 && t >= 3) {
            result = check_lemma_edgeless(g, k, *witness);
            ++report.checked_edgeless;
        } else if (s == 1 && t >= 2) {
            result = check_lemma_one_edge(g, k, *witness);
            ++report.checked_one_edge;
        } else if (s >= 2) {
            result = check_lemma_many_edges(g, k, *witness);
            ++report.checked_many_edges;
        } else {
            ++report.skipped;
            return;
        }
        for (const LemmaViolation& v : result.violations)
            report.violations.push_back({form.bytes, result.id, v});
    });

    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace turan
