#pragma once

#include "jspectra/enclosure.hpp"

namespace jspectra {

/// One evaluation of the Schur complement S(lambda) = A - lambda I +
/// B (D - lambda I)^{-1} B^T with its eigendecomposition and the count of
/// negative directions.
struct SchurSample {
    double lambda = 0.0;
    Matrix S;
    SymEig eig;
    int kappa_minus = 0;
};

/// Value of the generalized Rayleigh functional: the unique zero of
/// lambda -> s(lambda)[x] above mu, or -inf (empty optional) when the form
/// stays negative there.
struct RayleighValue {
    std::optional<double> value;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;

    bool finite() const { return value.has_value(); }
};

SchurSample schur_at(const BlockSystem& system, double lambda);

/// Builds S(lambda) without the eigendecomposition.
Matrix schur_matrix(const BlockSystem& system, double lambda);

/// s(lambda)[x] = x^T A x - lambda |x|^2 - (B^T x)^T (lambda I - D)^{-1} (B^T x),
/// valid for lambda above the spectrum of D.
double s_form(const BlockSystem& system, double lambda, const Vector& x);

/// d/dlambda of the form: -|x|^2 + |(lambda I - D)^{-1} B^T x|^2.
double s_form_deriv(const BlockSystem& system, double lambda, const Vector& x);

RayleighValue rayleigh_p(const BlockSystem& system, const EnclosureParams& params,
                         const Vector& x);

/// Number of eigenvalues of S(gamma) below -Tolerances::psd * norm(S(gamma)).
int kappa_minus(const BlockSystem& system, double gamma);

struct VmConstants {
    double epsilon = 0.0;
    double delta = 0.0;
};

/// Constants certifying the monotonicity condition on the interval:
/// |s(lambda)[x]| <= epsilon |x|^2 implies s'(lambda)[x] <= -delta |x|^2.
VmConstants vm_constants(const BlockSystem& system, const EnclosureParams& params,
                         double lo, double hi);

/// The block formula for (M - lambda)^{-1} assembled from S(lambda)^{-1}
/// and resolvents of D.
Matrix resolvent_blocks(const BlockSystem& system, double lambda);

/// Upper end of the search range for form roots: beyond it every
/// eigenvalue curve of S is negative.
double lambda_cap(const BlockSystem& system, const EnclosureParams& params, double gamma0);

}  // namespace jspectra
