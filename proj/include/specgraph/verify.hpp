#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

struct Violation {
    std::string graph6;
    std::string detail;
};

struct Witness {
    std::string graph6;
    double rho = 0.0;
    std::string note;
};

// Outcome of one exhaustive certification run. A suite passes iff it saw no
// violations; premise observations are logged in their own section and do
// not fail the suite.
struct VerificationReport {
    std::string suite;
    std::string universe;
    long instances = 0;
    std::vector<Violation> violations;  // capped at 100 entries
    long violation_total = 0;
    std::vector<Violation> premise_log;  // capped at 100 entries
    long premise_total = 0;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> stats;
    double wall_seconds = 0.0;

    bool passed() const { return violation_total == 0; }
};

// Gap bound over all connected nonregular distance-hereditary graphs up to
// n_max (<= 8), plus the edge-disjoint-path length premise and the
// dominance tabulation against the 1/(Dn) baseline.
VerificationReport verify_dh_lower_bound(int n_max);

// Radius bound over all k-trees on n vertices, with the unique-maximizer
// check against the split graph S_{k,n-k}.
VerificationReport verify_treewidth_extremal(int n, int k);

// Radius bound over all connected block graphs on n vertices with the given
// independence number, with the unique-maximizer check against the
// pineapple (and the shared-cut-vertex property on maximizers).
VerificationReport verify_block_extremal(int n, int alpha);

// Independence bookkeeping over all connected block graphs up to n_max
// (<= 9): recursion vs brute force, the two deletion identities, and the
// one-vertex-per-simplicial-block property.
VerificationReport verify_independence_machinery(int n_max);

// Pineapple cubic vs eigensolver, regime bounds, and baseline refinements
// over the (n, alpha) grid up to n_max (<= 60); the closed-form regime bound
// over all enumerated block graphs up to min(n_max, 9).
VerificationReport verify_pineapple_bounds(int n_max);

}  // namespace specgraph
