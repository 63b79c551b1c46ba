#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "specgraph/graph.hpp"

namespace specgraph {

// Spectral radius of the adjacency matrix together with the positive unit
// principal eigenvector. For connected graphs the vector is strictly
// positive and ||x|| = 1; residual is ||A x - rho x||_2.
struct SpectralData {
    double rho = 0.0;
    Eigen::VectorXd x;
    double residual = 0.0;
};

struct EigenSystem {
    Eigen::VectorXd values;   // unsorted, as left on the diagonal
    Eigen::MatrixXd vectors;  // column i pairs with values[i]
};

// Full dense symmetric eigensolver by cyclic Jacobi rotations; iterates
// sweeps until the off-diagonal Frobenius norm drops below 1e-13 (or
// stagnates at rounding level). Throws std::runtime_error if the sweep cap
// is hit without convergence.
EigenSystem jacobi_eigensystem(Eigen::MatrixXd a);

// Reference path: dense Jacobi for n <= 64, power iteration above that.
// Throws std::invalid_argument on disconnected input.
SpectralData spectral_radius(const Graph& g);

// Power iteration on A + I, stopping when successive Rayleigh quotients
// differ by less than 1e-13. Kept as an independent route for cross-checks.
SpectralData spectral_radius_power(const Graph& g);

// q(x) = x^3 - (n-alpha-1) x^2 - (n-1) x + (alpha-1)(n-alpha-1), whose
// largest positive root is the spectral radius of the pineapple on n
// vertices with independence number alpha.
struct CubicSpec {
    int n = 0;
    int alpha = 0;
    long long c2 = 0;  // coefficient of x^2
    long long c1 = 0;  // coefficient of x
    long long c0 = 0;  // constant term
};

// Requires 2 <= alpha <= n-2.
CubicSpec pineapple_cubic(int n, int alpha);

// Largest real root of the pineapple cubic, bracketed by
// [max(n-alpha, sqrt(n-1)), n-1] and resolved to 1e-12.
double pineapple_rho_exact(int n, int alpha);

// Spectral radius of the split graph S_{k,n-k}:
// (k - 1 + sqrt(4kn - (k+1)(3k-1))) / 2. Requires 1 <= k <= n.
double s_knk_rho(int n, int k);

}  // namespace specgraph
