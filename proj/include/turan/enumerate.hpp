#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/decomposition.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Visit exactly one representative per isomorphism class of graph on n
/// vertices containing no k disjoint paths on three vertices. Generation is
/// canonical-construction-path edge augmentation from the empty graph; a
/// child is accepted only when removing its canonical deletion edge lands
/// back in the parent's class, and any augmentation containing the forbidden
/// packing is pruned together with its whole subtree (containment is
/// monotone under edge addition). Enforced desk limit: n <= 10.
void enumerate_free_graphs(int n, int k,
                           const std::function<void(const Graph&, const CanonicalForm&)>& visit);

/// Number of isomorphism classes of all graphs on n vertices (the
/// enumerator run with the packing prune disabled). Desk limit n <= 9.
std::uint64_t count_graphs(int n);

struct VerificationReport {
    int n = 0;
    int k = 0;
    std::int64_t formula_value = 0;
    int observed_max = 0;
    std::vector<CanonicalForm> extremal_forms;  // attaining observed_max, sorted
    std::vector<CanonicalForm> expected_forms;  // canonical forms of extremal_graphs, sorted
    bool agree = false;
    std::uint64_t graphs_scanned = 0;
    std::int64_t elapsed_ms = 0;
};

/// Exhaustive check of one (n, k) instance: scan every free graph, record
/// the maximum edge count and all attaining canonical forms, and compare
/// with the formula value and the claimed extremal family. jobs > 1 splits
/// the generation tree across threads; the merged report does not depend on
/// scheduling.
VerificationReport verify_turan(int n, int k, int jobs = 1);

struct LemmaSweepViolation {
    std::string graph6;  // canonical form of the offending host graph
    LemmaId lemma;
    LemmaViolation detail;
};

struct LemmaSweepReport {
    int n = 0;
    int k = 0;
    std::uint64_t graphs_scanned = 0;   // free graphs enumerated
    std::uint64_t applicable = 0;       // of those, containing a (k-1)-packing
    std::uint64_t checked_edgeless = 0;
    std::uint64_t checked_one_edge = 0;
    std::uint64_t checked_many_edges = 0;
    std::uint64_t skipped = 0;          // leftover shape below any lemma's precondition
    std::vector<LemmaSweepViolation> violations;
    std::int64_t elapsed_ms = 0;
};

/// Run the applicable leftover lemma check on the best decomposition of
/// every graph that contains a (k-1)-packing but no k-packing. Requires
/// n <= 8 and k in {2, 3}; a sound implementation reports zero violations.
LemmaSweepReport verify_lemmas(int n, int k);

}  // namespace turan
