#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "jspectra/model.hpp"
#include "jspectra/rng.hpp"

namespace jspectra::testing {

// Closed-form fixtures used across the suites.
inline BlockSystem sys0() {
    Matrix a(1, 1), b(1, 1), d(1, 1);
    a << 0.0;
    b << 1.0;
    d << 0.0;
    return build_system(a, b, d);
}

inline BlockSystem sys1() {
    Matrix a(1, 1), b(1, 1), d(1, 1);
    a << 3.0;
    b << 1.0;
    d << 0.0;
    return build_system(a, b, d);
}

inline BlockSystem sys2() {
    Matrix a(2, 2), b(2, 1), d(1, 1);
    a << 1.0, 0.0, 0.0, 5.0;
    b << 1.0, 0.0;
    d << 0.0;
    return build_system(a, b, d);
}

inline Matrix random_symmetric(Rng& rng, int n) {
    Matrix g = rng.gaussian_matrix(n, n);
    return (g + g.transpose()) / 2.0;
}

inline BlockSystem random_system(Rng& rng, int n1, int n2) {
    return build_system(random_symmetric(rng, n1), rng.gaussian_matrix(n1, n2),
                        random_symmetric(rng, n2));
}

// Same with A shifted up until the b = 0 branch of the gap condition holds.
inline BlockSystem random_conda_system(Rng& rng, int n1, int n2, double margin = 0.1) {
    Matrix a = random_symmetric(rng, n1);
    Matrix b = rng.gaussian_matrix(n1, n2);
    Matrix d = random_symmetric(rng, n2);
    double a0 = sym_eig(b * b.transpose()).max();
    double alpha_minus = sym_eig(a).min();
    double delta_plus = sym_eig(d).max();
    double shift = 2.0 * (std::sqrt(a0) + margin) + delta_plus - alpha_minus;
    if (shift > 0.0) a.diagonal().array() += shift;
    return build_system(a, b, d);
}

// Eigenvalues of the compressed 2x2 matrix for complex test vectors; the
// public evaluation covers real vectors only.
inline std::pair<std::complex<double>, std::complex<double>> lambda_pm_complex(
    const BlockSystem& sys, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    using C = std::complex<double>;
    double nx2 = x.squaredNorm(), ny2 = y.squaredNorm();
    double alpha = (x.adjoint() * sys.A * x)(0).real() / nx2;
    double delta = (y.adjoint() * sys.D * y)(0).real() / ny2;
    C beta = (y.adjoint() * (sys.B.transpose() * x))(0) / std::sqrt(nx2 * ny2);
    double t = (alpha - delta) * (alpha - delta) / 4.0 - std::norm(beta);
    C root = t >= 0.0 ? C(std::sqrt(t), 0.0) : C(0.0, std::sqrt(-t));
    C mid((alpha + delta) / 2.0, 0.0);
    return {mid + root, mid - root};
}

inline std::vector<double> sorted_real_spectrum_above(const BlockSystem& sys, double floor,
                                                      double imag_tol) {
    std::vector<double> out;
    for (auto z : spectrum_M(sys).values)
        if (std::abs(z.imag()) <= imag_tol && z.real() > floor) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jspectra::testing
