#pragma once

#include <functional>

#include "jspectra/enclosure.hpp"

namespace jspectra {

using ScalarFn = std::function<double(double)>;

/// Dirichlet Laplacian coupled to multiplication operators on (0, 1):
/// A = -d^2/ds^2, B = diag(sqrt(w)), D = diag(u) on the interior grid.
struct Example1Config {
    int n = 16;
    ScalarFn u = [](double) { return 0.0; };
    ScalarFn w = [](double) { return 1.0; };
};

/// Schroedinger block coupled through a first-order operator:
/// A = -d^2/ds^2 + q, B^T = diag(v) * centered difference, D = diag(u).
struct Example2Config {
    int n = 16;
    ScalarFn q = [](double) { return 10.0; };
    ScalarFn u = [](double) { return 0.0; };
    ScalarFn v = [](double) { return 1.0; };
};

BlockSystem build_example1(const Example1Config& cfg);
BlockSystem build_example2(const Example2Config& cfg);

/// Second-difference Dirichlet matrix (1/h^2) tridiag(-1, 2, -1).
Matrix dirichlet_laplacian(int n);

/// Interior grid points i/(n+1), i = 1..n.
Vector interior_grid(int n);

/// One grid level of a refinement study.
struct ConvergenceRow {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    double mu = 0.0;
    std::optional<double> mu_plus;
    double gamma0 = 0.0;
    int kappa = 0;
    std::vector<double> lambdas;
    std::vector<double> est1_lower_margin;  // lambda_n - est1 lower bound
    std::vector<double> est1_upper_margin;  // nu_{kappa+n} - lambda_n
    std::vector<double> asym_residual;
};

/// Tracks mu, the gap edge and the first `count` eigenvalues across grids,
/// with the relative-bound pair taken at b = 0.
std::vector<ConvergenceRow> refine_and_track(const Example1Config& cfg,
                                             const std::vector<int>& n_list, int count);

}  // namespace jspectra
