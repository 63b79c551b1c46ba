#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/params.hpp"

namespace specgraph {

// Lower bounds on the degree-spectral gap Delta - rho for connected
// nonregular graphs. All take precomputed parameters so the verification
// suites can batch-feed enumerated parameter sets.

// (n*Delta - 2m) / (n * (D*(n*Delta - 2m) + 1)). Throws on regular input.
double cioba_bound_v1(const GraphParams& p);

// 1 / (D * n). Throws on regular input.
double cioba_bound_v2(const GraphParams& p);

// Distance-hereditary refinement:
// (n*Delta - 2m) * kappa / (n * (D*(n*Delta - 2m) + kappa)).
double dh_bound(const GraphParams& p);

// The same quantity without the leading 1/n factor. The sharper-looking
// variant is surfaced in reports alongside the safe one; only the safe one
// is asserted.
double dh_bound_unnormalized(const GraphParams& p);

// Upper bound on rho over graphs of tree-width k:
// (k - 1 + sqrt(4kn - (k+1)(3k-1))) / 2.
double treewidth_bound(int n, int k);

// Upper bounds on the pineapple spectral radius; which formula is sharp
// depends on which side of alpha = n - sqrt(n-1) the parameters fall.
enum class PineappleRegime { CliqueSide, StarSide };

struct RegimeBound {
    PineappleRegime regime = PineappleRegime::CliqueSide;
    double value = 0.0;
};

// Requires 2 <= alpha <= n-2; selects the regime by the alpha threshold.
RegimeBound pineapple_upper(int n, int alpha);

// The two formulas individually (each evaluable on its full domain).
double pineapple_upper_clique_side(int n, int alpha);
double pineapple_upper_star_side(int n, int alpha);

// Earlier mean-value-theorem baselines the pineapple bounds refine. The
// clique-side value needs beta^2 > n, the star-side value gamma > 0;
// components are absent when their precondition fails.
struct LltBaseline {
    std::optional<double> clique_side;
    std::optional<double> star_side;
};
LltBaseline llt_baseline(int n, int alpha);

// Stationary-point identity behind the distance-hereditary bound: the
// minimum of f(x) = (n*Delta-2m) x^2 + (kappa/D)(x_max - x)^2 equals
// (n*Delta-2m)*kappa*x_max^2 / (D*(n*Delta-2m)+kappa).
struct QuadraticMinCheck {
    double x_hat = 0.0;
    double f_at_x_hat = 0.0;
    double closed_form = 0.0;
};
QuadraticMinCheck quadratic_min_check(const GraphParams& p, double x_max);

// Per-graph evaluation of every applicable bound.
struct BoundEntry {
    std::string name;
    bool applicable = false;
    double value = 0.0;
    bool satisfied = false;
    double slack = 0.0;
};

struct BoundComparison {
    std::string left;
    std::string right;
    bool condition_met = false;  // the documented dominance precondition
    double difference = 0.0;     // left - right, raw
};

struct BoundReport {
    std::string graph6;
    GraphParams params;
    double rho = 0.0;
    double gap = 0.0;  // Delta - rho
    std::vector<BoundEntry> entries;
    std::vector<BoundComparison> dominance;
};

// Computes params and spectrum, then fills in every bound whose
// precondition holds. Throws on disconnected input.
BoundReport evaluate_bounds(const Graph& g);

// Fixed CSV layout: graph6,n,m,delta,diameter,kappa,alpha,rho,gap, then one
// column per bound (empty cell when not applicable).
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

}  // namespace specgraph
