#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "jspectra/errors.hpp"
#include "jspectra/tolerances.hpp"

namespace jspectra {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Full symmetric eigendecomposition, values ascending, columns of
/// `vectors` orthonormal.  Q diag(values) Q^T reconstructs the input
/// within Tolerances::eig relative.
struct SymEig {
    Vector values;
    Matrix vectors;

    double min() const { return values[0]; }
    double max() const { return values[values.size() - 1]; }
    /// Spectral norm of the decomposed matrix.
    double norm() const { return std::max(std::abs(min()), std::abs(max())); }
};

/// Eigenvalues of a general real matrix, unordered, conjugate-closed.
struct GenEig {
    std::vector<Complex> values;
};

SymEig sym_eig(const Matrix& s);
GenEig gen_eig(const Matrix& m);

/// Smallest singular value.
double min_singular(const Matrix& m);

/// Number of eigenvalues strictly below `cutoff`.
int negative_count(const Matrix& s, double cutoff);
/// Same with the default cutoff -Tolerances::psd * norm(s).
int negative_count(const Matrix& s);
int negative_count(const SymEig& eig, double cutoff);

/// Orthonormal basis of the span of the given vectors (columns of the
/// result); rank-deficient inputs are reduced to a basis of the span.
Matrix orthonormal_basis(const std::vector<Vector>& vs);
Matrix orthonormal_basis(const Matrix& columns);

/// Relative symmetry defect norm(s - s^T) / norm(s); 0 for the zero matrix.
bool is_symmetric(const Matrix& s, double tol_rel);

/// Spectral norm via singular values.
double spectral_norm(const Matrix& m);

}  // namespace jspectra
