#include "specgraph/spectra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace specgraph {

namespace {

constexpr double kOffTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

SpectralData perron_from(const Graph& g, double rho, Eigen::VectorXd x) {
    x.normalize();
    // orient so the dominant entry is positive, then insist on positivity
    int imax;
    x.cwiseAbs().maxCoeff(&imax);
    if (x(imax) < 0) x = -x;
    for (int i = 0; i < x.size(); ++i)
        if (x(i) <= 0.0)
            throw std::runtime_error("spectral_radius: principal eigenvector not strictly positive");
    SpectralData out;
    out.rho = rho;
    out.residual = (adjacency_matrix(g) * x - rho * x).norm();
    out.x = std::move(x);
    return out;
}

}  // namespace

EigenSystem jacobi_eigensystem(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::invalid_argument("jacobi_eigensystem: matrix must be square");
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    double off = off_diagonal_norm(a);
    double prev_off = std::numeric_limits<double>::infinity();
    int sweep = 0;
    while (off >= kOffTarget) {
        // stagnation at rounding level is acceptable; the residual check
        // downstream still guards accuracy
        if (off >= prev_off && off < 1e-11) break;
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("jacobi_eigensystem: sweep cap exceeded");
        prev_off = off;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }
    EigenSystem out;
    out.values = a.diagonal();
    out.vectors = std::move(v);
    return out;
}

SpectralData spectral_radius(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph must be connected");
    const int n = g.vertex_count();
    if (n == 1) {
        SpectralData out;
        out.rho = 0.0;
        out.x = Eigen::VectorXd::Ones(1);
        out.residual = 0.0;
        return out;
    }
    if (n > 64) return spectral_radius_power(g);

    EigenSystem es = jacobi_eigensystem(adjacency_matrix(g));
    int imax;
    es.values.maxCoeff(&imax);
    return perron_from(g, es.values(imax), es.vectors.col(imax));
}

SpectralData spectral_radius_power(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph must be connected");
    const int n = g.vertex_count();
    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    double prev_rq = -std::numeric_limits<double>::infinity();
    constexpr int kMaxIters = 2'000'000;
    for (int it = 0; it < kMaxIters; ++it) {
        Eigen::VectorXd y = a * x + x;  // (A + I) x, primitive for connected g
        const double rq = x.dot(y);
        x = y / y.norm();
        if (std::abs(rq - prev_rq) < 1e-13) return perron_from(g, rq - 1.0, std::move(x));
        prev_rq = rq;
    }
    throw std::runtime_error("spectral_radius_power: iteration cap exceeded");
}

CubicSpec pineapple_cubic(int n, int alpha) {
    if (alpha < 2 || alpha > n - 2)
        throw std::invalid_argument("pineapple_cubic: need 2 <= alpha <= n-2");
    CubicSpec spec;
    spec.n = n;
    spec.alpha = alpha;
    spec.c2 = -static_cast<long long>(n - alpha - 1);
    spec.c1 = -static_cast<long long>(n - 1);
    spec.c0 = static_cast<long long>(alpha - 1) * (n - alpha - 1);
    return spec;
}

double pineapple_rho_exact(int n, int alpha) {
    const CubicSpec spec = pineapple_cubic(n, alpha);
    auto q = [&](double x) {
        return ((x + double(spec.c2)) * x + double(spec.c1)) * x + double(spec.c0);
    };
    auto dq = [&](double x) { return (3.0 * x + 2.0 * double(spec.c2)) * x + double(spec.c1); };

    // the pineapple contains both K_{n-alpha+1} and the star, so its radius
    // sits strictly inside this bracket
    double lo = std::max(double(n - alpha), std::sqrt(double(n - 1)));
    double hi = double(n - 1);
    if (q(lo) > 0 || q(hi) < 0)
        throw std::runtime_error("pineapple_rho_exact: bracket failed");
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (q(mid) < 0 ? lo : hi) = mid;
    }
    double root = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double d = dq(root);
        if (d == 0.0) break;
        const double next = root - q(root) / d;
        if (!(next >= lo - 1.0 && next <= hi + 1.0)) break;
        root = next;
    }
    return root;
}

double s_knk_rho(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("s_knk_rho: need 1 <= k <= n");
    const double radicand = 4.0 * k * n - double(k + 1) * (3.0 * k - 1.0);
    return (k - 1 + std::sqrt(radicand)) / 2.0;
}

}  // namespace specgraph
