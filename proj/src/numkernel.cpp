#include "jspectra/numkernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace jspectra {

Tolerances& Tolerances::global() {
    static Tolerances tols;
    return tols;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidBound: return "InvalidBound";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::LambdaInSpectrumD: return "LambdaInSpectrumD";
        case ErrorCode::BstarXZero: return "BstarXZero";
        case ErrorCode::TooCloseToSigmaD: return "TooCloseToSigmaD";
        case ErrorCode::LambdaNotAboveDeltaPlus: return "LambdaNotAboveDeltaPlus";
        case ErrorCode::IntervalNotAboveMu: return "IntervalNotAboveMu";
        case ErrorCode::NonNegativeC: return "NonNegativeC";
        case ErrorCode::SingularSchur: return "SingularSchur";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NoEigenvalue: return "NoEigenvalue";
        case ErrorCode::MaxIterations: return "MaxIterations";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::IndexExceedsNu: return "IndexExceedsNu";
        case ErrorCode::StrictANotSatisfied: return "StrictANotSatisfied";
        case ErrorCode::GammaOutsideGap: return "GammaOutsideGap";
        case ErrorCode::GridTooSmall: return "GridTooSmall";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_symmetric(const Matrix& s, double tol_rel) {
    if (s.rows() != s.cols()) return false;
    double nrm = s.norm();
    if (nrm == 0.0) return true;
    return (s - s.transpose()).norm() <= tol_rel * nrm;
}

double spectral_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()[0];
}

SymEig sym_eig(const Matrix& s) {
    if (s.rows() != s.cols())
        throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(s.rows()) + "x" +
                                              std::to_string(s.cols()));
    if (!is_symmetric(s, Tolerances::global().sym))
        throw Error(ErrorCode::NotSymmetric, "symmetry defect exceeds tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NoConvergence, "symmetric eigensolver failed");
    return SymEig{solver.eigenvalues(), solver.eigenvectors()};
}

GenEig gen_eig(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
    Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NoConvergence, "real Schur iteration failed");
    GenEig out;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

double min_singular(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()[svd.singularValues().size() - 1];
}

int negative_count(const SymEig& eig, double cutoff) {
    int count = 0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        if (eig.values[i] < cutoff) ++count;
    return count;
}

int negative_count(const Matrix& s, double cutoff) {
    return negative_count(sym_eig(s), cutoff);
}

int negative_count(const Matrix& s) {
    SymEig eig = sym_eig(s);
    return negative_count(eig, -Tolerances::global().psd * eig.norm());
}

Matrix orthonormal_basis(const Matrix& columns) {
    if (columns.cols() == 0 || columns.rows() == 0)
        throw Error(ErrorCode::EmptyInput, "no vectors given");
    Eigen::ColPivHouseholderQR<Matrix> qr(columns);
    qr.setThreshold(1e-12);
    Eigen::Index rank = qr.rank();
    if (rank == 0) throw Error(ErrorCode::EmptyInput, "all vectors are zero");
    Matrix q = qr.householderQ() * Matrix::Identity(columns.rows(), rank);
    return q;
}

Matrix orthonormal_basis(const std::vector<Vector>& vs) {
    if (vs.empty()) throw Error(ErrorCode::EmptyInput, "no vectors given");
    Eigen::Index n = vs[0].size();
    Matrix cols(n, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "vectors of unequal dimension");
        cols.col(static_cast<Eigen::Index>(j)) = vs[j];
    }
    return orthonormal_basis(cols);
}

}  // namespace jspectra
