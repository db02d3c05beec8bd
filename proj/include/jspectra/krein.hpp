#pragma once

#include "jspectra/enclosure.hpp"

namespace jspectra {

/// Verdict for one real eigenvalue above mu: minimum eigenvalue of the
/// Gram matrix of its invariant-subspace basis in the indefinite inner
/// product, positive for spectral points of positive type.
struct PositiveTypeVerdict {
    double eigenvalue = 0.0;
    int multiplicity = 1;
    double min_gram_eigenvalue = 0.0;
    bool positive = false;
};

struct KreinCertificate {
    double gamma = 0.0;
    bool jm_minus_gamma_psd = false;
    double min_eig_jm = 0.0;
    std::vector<PositiveTypeVerdict> positive_type;
    int nonreal_count = 0;
};

/// [v, w] = <J v, w> = (first blocks) - (second blocks).
double indefinite_inner(Eigen::Index n1, const Vector& v, const Vector& w);
double indefinite_inner(const BlockSystem& system, const Vector& v, const Vector& w);

/// Gram positivity of the invariant subspace of every real eigenvalue
/// above mu (clustered within the relative clustering tolerance).
std::vector<PositiveTypeVerdict> positive_type_check(const BlockSystem& system,
                                                     const EnclosureParams& params);

/// PSD verdict on J(M - gamma I) for gamma in the spectral-free gap,
/// available under the strict gap condition.
std::pair<bool, double> krein_nonneg_check(const BlockSystem& system,
                                           const EnclosureParams& params, double gamma);

/// Eigenvalues with non-negligible imaginary part.
int nonreal_count(const BlockSystem& system);

}  // namespace jspectra
