#include "jspectra/qnr.hpp"

#include <cmath>

#include "jspectra/rng.hpp"

namespace jspectra {

Complex sqrt_upper(double t) {
    if (t >= 0.0) return Complex(std::sqrt(t), 0.0);
    return Complex(0.0, std::sqrt(-t));
}

QnrPoint lambda_pm(const BlockSystem& sys, const Vector& x, const Vector& y) {
    if (x.size() != sys.n1() || y.size() != sys.n2())
        throw Error(ErrorCode::DimensionMismatch, "test vectors do not match the blocks");
    const double nx = x.norm(), ny = y.norm();
    if (nx == 0.0 || ny == 0.0) throw Error(ErrorCode::ZeroVector, "test vector");

    QnrPoint p;
    p.x = x;
    p.y = y;
    p.alpha = form_A(sys, x) / (nx * nx);
    p.delta = form_D(sys, y) / (ny * ny);
    p.beta = y.dot(sys.B.transpose() * x) / (nx * ny);

    const double mid = (p.alpha + p.delta) / 2.0;
    const double half = (p.alpha - p.delta) / 2.0;
    Complex root = sqrt_upper(half * half - p.beta * p.beta);
    p.lambda_plus = mid + root;
    p.lambda_minus = mid - root;
    return p;
}

std::vector<QnrPoint> sample_qnr(const BlockSystem& sys, int count, std::uint64_t seed) {
    if (count < 1) throw Error(ErrorCode::EmptyInput, "count must be at least 1");
    std::vector<QnrPoint> points;
    points.reserve(static_cast<std::size_t>(2 * count));
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        Vector x = rng.unit_vector(sys.n1());
        Vector y = rng.unit_vector(sys.n2());
        QnrPoint p = lambda_pm(sys, x, y);
        p.branch = +1;
        points.push_back(p);
        p.branch = -1;
        points.push_back(p);
    }
    return points;
}

QnrPoint embed_WD(const BlockSystem& sys, const Vector& y) {
    if (sys.n1() < 2) throw Error(ErrorCode::DimensionTooSmall, "first component must have dim >= 2");
    if (y.size() != sys.n2()) throw Error(ErrorCode::DimensionMismatch, "y");
    if (y.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "y");

    // One linear constraint: x orthogonal to B y makes the compression diagonal.
    Vector c = sys.B * y;
    Vector x;
    if (c.norm() == 0.0) {
        x = Vector::Unit(sys.n1(), 0);
    } else {
        Vector dir = c / c.norm();
        // Unit coordinate vector least aligned with the constraint direction.
        Eigen::Index k = 0;
        for (Eigen::Index i = 1; i < dir.size(); ++i)
            if (std::abs(dir[i]) < std::abs(dir[k])) k = i;
        x = Vector::Unit(sys.n1(), k) - dir[k] * dir;
        x /= x.norm();
    }
    return lambda_pm(sys, x, y);
}

DetIdentity det_identity_check(const BlockSystem& sys, double lambda, const Vector& x) {
    if (x.size() != sys.n1()) throw Error(ErrorCode::DimensionMismatch, "x");
    if (x.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "x");
    const Tolerances& tol = Tolerances::global();
    if (dist_sigma_D(sys, lambda) <= tol.sep * (1.0 + sys.norm_D()))
        throw Error(ErrorCode::LambdaInSpectrumD, "lambda = " + std::to_string(lambda));
    Vector bx = sys.B.transpose() * x;
    if (bx.norm() <= tol.sym * (1.0 + spectral_norm(sys.B)) * x.norm())
        throw Error(ErrorCode::BstarXZero, "B^T x vanishes");

    Vector y = resolvent_D(sys, lambda, bx);
    QnrPoint p = lambda_pm(sys, x, y);

    DetIdentity out;
    out.lhs = (p.alpha - lambda) * (p.delta - lambda) + p.beta * p.beta;

    const double nx2 = x.squaredNorm();
    const double ny2 = y.squaredNorm();
    const double coupling = bx.dot(y);  // <B^T x, (D-lambda)^{-1} B^T x>
    const double s_value = form_A(sys, x) - lambda * nx2 + coupling;
    out.rhs = coupling * s_value / (nx2 * ny2);
    return out;
}

}  // namespace jspectra
