#pragma once

#include "jspectra/numkernel.hpp"

namespace jspectra {

/// The block system (A, B, D) with A, D symmetric, plus cached spectral
/// data of the diagonal blocks.  Immutable after construction.
struct BlockSystem {
    Matrix A;  // n1 x n1 symmetric
    Matrix B;  // n1 x n2
    Matrix D;  // n2 x n2 symmetric
    SymEig spec_A;
    SymEig spec_D;
    double alpha_minus = 0.0;  // min eigenvalue of A
    double delta_plus = 0.0;   // max eigenvalue of D
    double delta_minus = 0.0;  // min eigenvalue of D
    Matrix B_tilde;            // B * Q_D, cached for Schur evaluations

    Eigen::Index n1() const { return A.rows(); }
    Eigen::Index n2() const { return D.rows(); }
    double norm_A() const { return spec_A.norm(); }
    double norm_D() const { return spec_D.norm(); }
};

/// The assembled operator [[A, B], [-B^T, D]] and the signature matrix
/// J = diag(I, -I); J*M is symmetric.
struct AssembledM {
    Matrix M;
    Matrix J;
};

BlockSystem build_system(const Matrix& A, const Matrix& B, const Matrix& D);
AssembledM assemble(const BlockSystem& system);

/// The adjoint [[A, -B], [B^T, D]]; equals assemble(system).M transposed.
Matrix adjoint(const BlockSystem& system);

/// All eigenvalues of the assembled M (complex, conjugate-closed).
GenEig spectrum_M(const BlockSystem& system);

/// Euclidean norm scale of M used by relative tolerances.
double norm_M(const BlockSystem& system);

/// Quadratic forms of the diagonal blocks evaluated through the cached
/// eigendecompositions (sums of same-sign terms, no cancellation beyond
/// the one intrinsic to the form).
double form_A(const BlockSystem& system, const Vector& x);
double form_D(const BlockSystem& system, const Vector& y);

/// (D - lambda I)^{-1} v through the cached eigendecomposition.
Vector resolvent_D(const BlockSystem& system, double lambda, const Vector& v);

/// Distance from lambda to the spectrum of D.
double dist_sigma_D(const BlockSystem& system, double lambda);

}  // namespace jspectra
