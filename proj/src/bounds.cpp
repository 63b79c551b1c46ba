#include "specgraph/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "specgraph/families.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/independence.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

namespace {

constexpr double kTol = 1e-9;

void require_nonregular(const GraphParams& p, const char* who) {
    if (p.is_regular) throw std::invalid_argument(std::string(who) + ": graph must be nonregular");
}

double degree_surplus(const GraphParams& p) {
    return double(p.n) * p.delta_max - 2.0 * p.m;  // n*Delta - 2m > 0 iff nonregular
}

}  // namespace

double cioba_bound_v1(const GraphParams& p) {
    require_nonregular(p, "cioba_bound_v1");
    const double s = degree_surplus(p);
    return s / (p.n * (p.diameter * s + 1.0));
}

double cioba_bound_v2(const GraphParams& p) {
    require_nonregular(p, "cioba_bound_v2");
    return 1.0 / (double(p.diameter) * p.n);
}

double dh_bound(const GraphParams& p) {
    require_nonregular(p, "dh_bound");
    const double s = degree_surplus(p);
    const double k = p.edge_connectivity;
    return s * k / (p.n * (p.diameter * s + k));
}

double dh_bound_unnormalized(const GraphParams& p) {
    require_nonregular(p, "dh_bound_unnormalized");
    const double s = degree_surplus(p);
    const double k = p.edge_connectivity;
    return s * k / (p.diameter * s + k);
}

double treewidth_bound(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("treewidth_bound: need 1 <= k <= n");
    const double radicand = 4.0 * k * n - double(k + 1) * (3.0 * k - 1.0);
    return (k - 1 + std::sqrt(radicand)) / 2.0;
}

double pineapple_upper_clique_side(int n, int alpha) {
    const double beta = n - alpha + 1;
    const double b2n = beta * beta - n;
    const double disc = b2n * b2n + 4.0 * (n - beta) * (2.0 * beta - 1.0);
    return beta - 1.0 + (std::sqrt(disc) - b2n) / (4.0 * beta - 2.0);
}

double pineapple_upper_star_side(int n, int alpha) {
    const double root = std::sqrt(double(n - 1));
    const double gamma = 1.0 - double(n - alpha - 1) / root;
    const double inner = (alpha - 1) * gamma * gamma + (n - alpha) * (2.0 - gamma);
    return (2.0 * root + std::sqrt(inner)) / (2.0 + gamma);
}

RegimeBound pineapple_upper(int n, int alpha) {
    if (alpha < 2 || alpha > n - 2)
        throw std::invalid_argument("pineapple_upper: need 2 <= alpha <= n-2");
    RegimeBound out;
    if (double(alpha) <= double(n) - std::sqrt(double(n - 1))) {
        out.regime = PineappleRegime::CliqueSide;
        out.value = pineapple_upper_clique_side(n, alpha);
    } else {
        out.regime = PineappleRegime::StarSide;
        out.value = pineapple_upper_star_side(n, alpha);
    }
    return out;
}

LltBaseline llt_baseline(int n, int alpha) {
    if (alpha < 2 || alpha > n - 2)
        throw std::invalid_argument("llt_baseline: need 2 <= alpha <= n-2");
    LltBaseline out;
    const double beta = n - alpha + 1;
    if (beta * beta > n) out.clique_side = beta - 1.0 + (n - beta) / (beta * beta - n);
    const double root = std::sqrt(double(n - 1));
    const double gamma = 1.0 - double(n - alpha - 1) / root;
    if (gamma > 0.0) out.star_side = root + (n - alpha) * (1.0 - gamma) / (2.0 * root * gamma);
    return out;
}

QuadraticMinCheck quadratic_min_check(const GraphParams& p, double x_max) {
    require_nonregular(p, "quadratic_min_check");
    const double s = degree_surplus(p);
    const double k = p.edge_connectivity;
    const double d = p.diameter;
    QuadraticMinCheck out;
    out.x_hat = k * x_max / (d * s + k);
    out.f_at_x_hat = s * out.x_hat * out.x_hat + (k / d) * (x_max - out.x_hat) * (x_max - out.x_hat);
    out.closed_form = s * k * x_max * x_max / (d * s + k);
    return out;
}

BoundReport evaluate_bounds(const Graph& g) {
    BoundReport report;
    report.graph6 = graph6_encode(g);
    report.params = compute_params(g);
    const SpectralData sd = spectral_radius(g);
    report.rho = sd.rho;
    report.gap = report.params.delta_max - sd.rho;

    const GraphParams& p = report.params;
    const bool nonregular = !p.is_regular;
    const bool dh = recognize_distance_hereditary(g);
    const bool block = recognize_block_graph(g);
    const bool tree = is_tree(g);

    auto lower = [&](const std::string& name, bool applicable, double value) {
        BoundEntry e;
        e.name = name;
        e.applicable = applicable;
        if (applicable) {
            e.value = value;
            e.slack = report.gap - value;
            e.satisfied = e.slack >= -kTol;
        }
        report.entries.push_back(std::move(e));
    };
    auto upper = [&](const std::string& name, bool applicable, double value) {
        BoundEntry e;
        e.name = name;
        e.applicable = applicable;
        if (applicable) {
            e.value = value;
            e.slack = value - report.rho;
            e.satisfied = e.slack >= -kTol;
        }
        report.entries.push_back(std::move(e));
    };

    lower("cioba_v1", nonregular, nonregular ? cioba_bound_v1(p) : 0.0);
    lower("cioba_v2", nonregular, nonregular ? cioba_bound_v2(p) : 0.0);
    lower("dh_bound", nonregular && dh, nonregular && dh ? dh_bound(p) : 0.0);
    lower("dh_bound_unnormalized", nonregular && dh,
          nonregular && dh ? dh_bound_unnormalized(p) : 0.0);
    upper("tree_sqrt", tree, tree ? std::sqrt(double(p.n - 1)) : 0.0);

    const int alpha = p.independence_number;
    double pineapple_exact = 0.0;
    if (block) {
        if (alpha >= 2 && alpha <= p.n - 2)
            pineapple_exact = pineapple_rho_exact(p.n, alpha);
        else if (alpha == 1)
            pineapple_exact = p.n - 1.0;  // the pineapple degenerates to K_n
        else
            pineapple_exact = std::sqrt(double(p.n - 1));  // ... or to the star
    }
    upper("pineapple_exact", block, pineapple_exact);
    const bool regime_ok = block && alpha >= 2 && alpha <= p.n - 2;
    upper("pineapple_regime", regime_ok, regime_ok ? pineapple_upper(p.n, alpha).value : 0.0);

    if (nonregular && dh) {
        BoundComparison cmp;
        cmp.left = "dh_bound";
        cmp.right = "cioba_v2";
        cmp.condition_met =
            p.diameter * degree_surplus(p) > 2.0 && p.edge_connectivity > 2;
        cmp.difference = dh_bound(p) - cioba_bound_v2(p);
        report.dominance.push_back(std::move(cmp));
    }
    if (regime_ok) {
        const RegimeBound rb = pineapple_upper(p.n, alpha);
        const LltBaseline base = llt_baseline(p.n, alpha);
        if (rb.regime == PineappleRegime::CliqueSide && base.clique_side) {
            report.dominance.push_back(
                {"pineapple_regime", "llt_clique_side", true, rb.value - *base.clique_side});
        }
        if (rb.regime == PineappleRegime::StarSide && base.star_side) {
            report.dominance.push_back(
                {"pineapple_regime", "llt_star_side", true, rb.value - *base.star_side});
        }
    }
    return report;
}

namespace {
const char* kBoundColumns[] = {"cioba_v1",  "cioba_v2",        "dh_bound",
                               "dh_bound_unnormalized", "tree_sqrt", "pineapple_exact",
                               "pineapple_regime"};
}

std::string bound_report_csv_header() {
    std::ostringstream out;
    out << "graph6,n,m,delta,diameter,kappa,alpha,rho,gap";
    for (const char* c : kBoundColumns) out << "," << c;
    return out.str();
}

std::string bound_report_csv_row(const BoundReport& r) {
    std::ostringstream out;
    out.precision(15);
    out << r.graph6 << "," << r.params.n << "," << r.params.m << "," << r.params.delta_max << ","
        << r.params.diameter << "," << r.params.edge_connectivity << ","
        << r.params.independence_number << "," << r.rho << "," << r.gap;
    for (const char* c : kBoundColumns) {
        out << ",";
        for (const auto& e : r.entries)
            if (e.name == c && e.applicable) out << e.value;
    }
    return out.str();
}

}  // namespace specgraph
