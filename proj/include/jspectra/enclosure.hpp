#pragma once

#include <optional>

#include "jspectra/model.hpp"

namespace jspectra {

/// Coupling-strength certificate: B B^T <= a I + b A (upper pair) and
/// B B^T >= a_hat I + b_hat A (lower pair), both up to PSD slack.
struct RelativeBoundPair {
    double a = 0.0;
    double b = 0.0;
    double a_hat = 0.0;
    double b_hat = 0.0;
};

/// All spectral-enclosure constants derived from (a, b) and the edges of
/// the diagonal spectra.  Infinite values are encoded as empty optionals:
/// mu_plus absent means +inf (no gap), mu_minus/xi2 absent mean -inf
/// (unbounded-D branch, reachable only via the explicit flag).
struct EnclosureParams {
    double alpha_minus = 0.0;
    double delta_plus = 0.0;
    double delta_minus = 0.0;
    double a = 0.0;
    double b = 0.0;
    double mu = 0.0;
    std::optional<double> mu_minus;
    std::optional<double> mu_plus;
    double xi1 = 0.0;
    std::optional<double> xi2;
    double xi_minus = 0.0;
    double eta = 0.0;
    bool condA = false;
    bool condA1 = false;
    bool condA2 = false;
    bool strictA = false;
    bool d_unbounded = false;

    /// Width of the real spectral-free gap (mu, mu_plus); 0 without condA.
    double gap() const { return (condA && mu_plus) ? *mu_plus - mu : 0.0; }
};

/// Smallest a such that B B^T <= a I + b A, i.e. max eigenvalue of B B^T - b A.
double min_a_for_b(const BlockSystem& system, double b);

/// Largest a_hat such that B B^T >= a_hat I + b_hat A.
double max_ahat_for_bhat(const BlockSystem& system, double b_hat);

EnclosureParams enclosure_params(const BlockSystem& system, double a, double b,
                                 bool d_unbounded = false);

/// Membership of z in the enclosure set, with boundary slack
/// Tolerances::box * (1 + |z|).
bool in_enclosure(Complex z, const EnclosureParams& params);

/// Signed membership margin (positive inside, negative outside, no slack).
double enclosure_margin(Complex z, const EnclosureParams& params);

struct OptimizedBound {
    double a = 0.0;
    double b = 0.0;
    EnclosureParams params;
};

/// Evaluates the minimal-a pair for every b in the grid and picks the best:
/// a pair satisfying condition (A) with maximal gap if any does, otherwise
/// the pair with minimal eta (ties on mu, then on b).
OptimizedBound optimize_bound(const BlockSystem& system, const std::vector<double>& b_grid);

/// {0} united with 2^k * norm(B)^2 / norm(A) for k = -6..6, when finite.
std::vector<double> default_b_grid(const BlockSystem& system);

struct NottBound {
    bool premise = false;
    double bound = 0.0;  // NaN when the premise fails
};

/// Quadratic-root bound: if ((t - delta)/2)^2 <= b t + a then
/// b delta + b^2 + a >= 0 and (t - delta)/2 <= b + sqrt(b delta + b^2 + a).
NottBound nott_bound(double a, double b, double t, double delta);

}  // namespace jspectra
