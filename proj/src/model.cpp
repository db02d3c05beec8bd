#include "jspectra/model.hpp"

#include <cmath>
#include <limits>

namespace jspectra {

BlockSystem build_system(const Matrix& A, const Matrix& B, const Matrix& D) {
    if (A.rows() != A.cols())
        throw Error(ErrorCode::NonSquare, "A must be square");
    if (D.rows() != D.cols())
        throw Error(ErrorCode::NonSquare, "D must be square");
    if (B.rows() != A.rows() || B.cols() != D.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "B must be " + std::to_string(A.rows()) + "x" + std::to_string(D.rows()));
    const double tol_sym = Tolerances::global().sym;
    if (!is_symmetric(A, tol_sym)) throw Error(ErrorCode::NotSymmetric, "A");
    if (!is_symmetric(D, tol_sym)) throw Error(ErrorCode::NotSymmetric, "D");

    BlockSystem sys;
    sys.A = (A + A.transpose()) / 2.0;
    sys.B = B;
    sys.D = (D + D.transpose()) / 2.0;
    sys.spec_A = sym_eig(sys.A);
    sys.spec_D = sym_eig(sys.D);
    sys.alpha_minus = sys.spec_A.min();
    sys.delta_plus = sys.spec_D.max();
    sys.delta_minus = sys.spec_D.min();
    sys.B_tilde = sys.B * sys.spec_D.vectors;
    return sys;
}

AssembledM assemble(const BlockSystem& sys) {
    const Eigen::Index n1 = sys.n1(), n2 = sys.n2(), n = n1 + n2;
    AssembledM out;
    out.M.setZero(n, n);
    out.M.topLeftCorner(n1, n1) = sys.A;
    out.M.topRightCorner(n1, n2) = sys.B;
    out.M.bottomLeftCorner(n2, n1) = -sys.B.transpose();
    out.M.bottomRightCorner(n2, n2) = sys.D;
    out.J = Matrix::Identity(n, n);
    out.J.bottomRightCorner(n2, n2) *= -1.0;
    return out;
}

Matrix adjoint(const BlockSystem& sys) {
    const Eigen::Index n1 = sys.n1(), n2 = sys.n2(), n = n1 + n2;
    Matrix m(n, n);
    m.topLeftCorner(n1, n1) = sys.A;
    m.topRightCorner(n1, n2) = -sys.B;
    m.bottomLeftCorner(n2, n1) = sys.B.transpose();
    m.bottomRightCorner(n2, n2) = sys.D;
    return m;
}

GenEig spectrum_M(const BlockSystem& sys) {
    return gen_eig(assemble(sys).M);
}

double norm_M(const BlockSystem& sys) {
    return assemble(sys).M.norm();
}

double form_A(const BlockSystem& sys, const Vector& x) {
    Vector c = sys.spec_A.vectors.transpose() * x;
    double value = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) value += sys.spec_A.values[i] * c[i] * c[i];
    return value;
}

double form_D(const BlockSystem& sys, const Vector& y) {
    Vector c = sys.spec_D.vectors.transpose() * y;
    double value = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) value += sys.spec_D.values[i] * c[i] * c[i];
    return value;
}

Vector resolvent_D(const BlockSystem& sys, double lambda, const Vector& v) {
    Vector c = sys.spec_D.vectors.transpose() * v;
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] /= sys.spec_D.values[i] - lambda;
    return sys.spec_D.vectors * c;
}

double dist_sigma_D(const BlockSystem& sys, double lambda) {
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < sys.spec_D.values.size(); ++i)
        dist = std::min(dist, std::abs(sys.spec_D.values[i] - lambda));
    return dist;
}

}  // namespace jspectra
