#pragma once

#include <cstdint>

#include "jspectra/schur.hpp"

namespace jspectra {

/// Variational eigenvalues above gamma0 with their first-component
/// eigenvectors and solver diagnostics.
struct VarEigResult {
    double gamma0 = 0.0;
    int kappa = 0;
    std::vector<double> eigenvalues;
    std::vector<Vector> eigenvectors_x;
    std::vector<bool> converged;
    std::vector<int> iterations;
};

/// Per-index eigenvalue bounds derived from the eigenvalues nu of A.
struct BoundReport {
    Vector nu;  // ascending eigenvalues of A
    std::vector<double> est1_lower;
    std::vector<double> est1_upper;
    std::vector<std::optional<double>> est2_upper;
    bool discr_ok = true;
    std::vector<double> asym_residual;
};

/// j-th ascending eigenvalue of S(lambda) with its unit eigenvector
/// (sign fixed so the first significant entry is positive).
std::pair<double, Vector> eigencurve(const BlockSystem& system, int j, double lambda);

/// Root of the (kappa+n)-th eigenvalue curve of S in (gamma0, inf):
/// safeguarded Rayleigh-functional iteration with a bisection fallback.
std::pair<double, Vector> solve_eigenvalue(const BlockSystem& system,
                                           const EnclosureParams& params, double gamma0,
                                           int n, int* iterations_out = nullptr);

VarEigResult variational_spectrum(const BlockSystem& system, const EnclosureParams& params,
                                  double gamma0, int count);

/// Largest Rayleigh-functional value over a subspace (columns of V
/// orthonormal): the zero of the projected top eigenvalue curve, or -inf.
std::optional<double> subspace_max_p(const BlockSystem& system, const EnclosureParams& params,
                                     const Matrix& V);

struct WitnessReport {
    int subspace_trials = 0;
    int subspace_violations = 0;
    bool attainment_ok = false;
    double attained_value = 0.0;
    int constraint_trials = 0;
    int constraint_violations = 0;

    bool clean() const {
        return subspace_violations == 0 && constraint_violations == 0 && attainment_ok;
    }
};

/// Samples both characterizations of the n-th eigenvalue: random
/// trial subspaces cannot beat it, the eigenvector subspace attains it,
/// and random constraint spaces leave some direction at or below it.
WitnessReport minmax_witness_check(const BlockSystem& system, const EnclosureParams& params,
                                   double gamma0, int n, int trials, std::uint64_t seed);

struct LambdaPlusReport {
    int samples = 0;
    int finite_cases = 0;
    int infinite_cases = 0;
    double max_attained_error = 0.0;  // |lambda_plus(x, y*) - p(x)| relative
    int undercut_violations = 0;      // random y beating p(x) by more than tol
    int infinite_violations = 0;      // p = -inf cases with min Re lambda_plus above mu

    bool clean() const { return undercut_violations == 0 && infinite_violations == 0; }
};

/// Checks the inner infimum of the two-argument principle: at y* =
/// (D - p(x))^{-1} B^T x the value p(x) is attained, and no sampled y
/// goes below it; for p(x) = -inf the sampled infimum drops to mu.
LambdaPlusReport lambda_plus_minmax_check(const BlockSystem& system,
                                          const EnclosureParams& params, double gamma0,
                                          int trials, std::uint64_t seed);

BoundReport bounds_report(const BlockSystem& system, const EnclosureParams& params,
                          const VarEigResult& result, double a, double b, double a_hat,
                          double b_hat);

/// (mu + mu_plus)/2 under the strict gap condition (index shift zero),
/// otherwise just above mu.
double default_gamma0(const EnclosureParams& params);

}  // namespace jspectra
