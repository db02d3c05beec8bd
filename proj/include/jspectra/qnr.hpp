#pragma once

#include <cstdint>

#include "jspectra/enclosure.hpp"

namespace jspectra {

/// One point pair of the quadratic numerical range: the eigenvalues of the
/// compressed 2x2 matrix [[alpha, beta], [-beta, delta]] built from a test
/// vector pair (x, y).
struct QnrPoint {
    Complex lambda_plus;
    Complex lambda_minus;
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    Vector x;
    Vector y;
    int branch = +1;  // which branch this entry reports when listed

    Complex value() const { return branch >= 0 ? lambda_plus : lambda_minus; }
};

/// Square root with the branch fixed to Im sqrt(t) > 0 for t < 0.
Complex sqrt_upper(double t);

QnrPoint lambda_pm(const BlockSystem& system, const Vector& x, const Vector& y);

/// 2*count branch values from seeded Gaussian test-vector pairs.
std::vector<QnrPoint> sample_qnr(const BlockSystem& system, int count, std::uint64_t seed);

/// Realizes a Rayleigh quotient of D inside the quadratic numerical range
/// by choosing x orthogonal to the coupling direction of y.
QnrPoint embed_WD(const BlockSystem& system, const Vector& y);

struct DetIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Both sides of det(M_{x,y} - lambda) = <B^T x, (D-lambda)^-1 B^T x> *
/// s(lambda)[x] / (|x|^2 |y|^2) with y = (D-lambda)^-1 B^T x.
DetIdentity det_identity_check(const BlockSystem& system, double lambda, const Vector& x);

}  // namespace jspectra
