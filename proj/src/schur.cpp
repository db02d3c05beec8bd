#include "jspectra/schur.hpp"

#include <cmath>

namespace jspectra {

namespace {

void require_above_delta_plus(const BlockSystem& sys, double lambda) {
    double sep = Tolerances::global().sep * (1.0 + sys.norm_D());
    if (lambda <= sys.delta_plus + sep)
        throw Error(ErrorCode::LambdaNotAboveDeltaPlus,
                    "lambda = " + std::to_string(lambda) + " vs delta_plus = " +
                        std::to_string(sys.delta_plus));
}

}  // namespace

Matrix schur_matrix(const BlockSystem& sys, double lambda) {
    double sep = Tolerances::global().sep * (1.0 + sys.norm_D());
    if (dist_sigma_D(sys, lambda) <= sep)
        throw Error(ErrorCode::TooCloseToSigmaD, "lambda = " + std::to_string(lambda));
    // B (D - lambda)^{-1} B^T through the cached eigenbasis of D.
    Matrix scaled = sys.B_tilde;
    for (Eigen::Index j = 0; j < scaled.cols(); ++j)
        scaled.col(j) /= sys.spec_D.values[j] - lambda;
    Matrix s = sys.A + scaled * sys.B_tilde.transpose();
    s.diagonal().array() -= lambda;
    return (s + s.transpose()) / 2.0;
}

SchurSample schur_at(const BlockSystem& sys, double lambda) {
    SchurSample sample;
    sample.lambda = lambda;
    sample.S = schur_matrix(sys, lambda);
    sample.eig = sym_eig(sample.S);
    sample.kappa_minus =
        negative_count(sample.eig, -Tolerances::global().psd * sample.eig.norm());
    return sample;
}

double s_form(const BlockSystem& sys, double lambda, const Vector& x) {
    require_above_delta_plus(sys, lambda);
    Vector w = sys.B_tilde.transpose() * x;
    double coupling = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        coupling += w[i] * w[i] / (lambda - sys.spec_D.values[i]);
    return form_A(sys, x) - lambda * x.squaredNorm() - coupling;
}

double s_form_deriv(const BlockSystem& sys, double lambda, const Vector& x) {
    require_above_delta_plus(sys, lambda);
    Vector w = sys.B_tilde.transpose() * x;
    double pull = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        double r = w[i] / (lambda - sys.spec_D.values[i]);
        pull += r * r;
    }
    return -x.squaredNorm() + pull;
}

int kappa_minus(const BlockSystem& sys, double gamma) {
    require_above_delta_plus(sys, gamma);
    return schur_at(sys, gamma).kappa_minus;
}

double lambda_cap(const BlockSystem& sys, const EnclosureParams& params, double gamma0) {
    double na = sys.norm_A();
    return std::max(gamma0, sys.alpha_minus) +
           10.0 * (1.0 + na + params.a + params.b * na);
}

RayleighValue rayleigh_p(const BlockSystem& sys, const EnclosureParams& params,
                         const Vector& x_in) {
    if (x_in.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "x");
    const Vector x = x_in / x_in.norm();
    const Tolerances& tol = Tolerances::global();

    const double eps_mu = 1e-7 * (1.0 + std::abs(params.mu));
    const double lo0 = params.mu + eps_mu;
    auto stop = [&](double lambda, double value) {
        return std::abs(value) <= tol.root * (1.0 + std::abs(lambda));
    };

    RayleighValue out;
    double s_lo = s_form(sys, lo0, x);
    if (s_lo < 0.0 && !stop(lo0, s_lo)) return out;  // negative throughout (mu, inf)
    if (stop(lo0, s_lo)) {
        out.value = lo0;
        out.bracket_lo = out.bracket_hi = lo0;
        return out;
    }

    // Bracket the sign change by doubling the step.
    const double cap = lambda_cap(sys, params, lo0);
    double lo = lo0, hi = lo0;
    double step = 0.5 * (1.0 + std::abs(lo0));
    double s_hi = s_lo;
    while (s_hi > 0.0) {
        lo = hi;
        s_lo = s_hi;
        hi = hi + step;
        step *= 2.0;
        if (hi > cap) {
            if (lo >= cap)
                throw Error(ErrorCode::MaxIterations, "no sign change below the cap");
            hi = cap;
        }
        s_hi = s_form(sys, hi, x);
        ++out.iterations;
    }

    // Newton from the midpoint, kept inside the bracket; the form is
    // strictly decreasing wherever it is small, so the root is simple.
    // Once the tolerance is met the iteration keeps polishing while the
    // residual still improves, so roots usually land at the machine floor.
    double lambda = (lo + hi) / 2.0;
    double value = s_form(sys, lambda, x);
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        ++out.iterations;
        if (value > 0.0)
            lo = lambda;
        else
            hi = lambda;
        converged = converged || stop(lambda, value);
        double deriv = s_form_deriv(sys, lambda, x);
        double next = lambda - value / deriv;
        if (!(deriv < 0.0) || next <= lo || next >= hi)
            next = converged ? lambda : (lo + hi) / 2.0;
        if (next == lambda && !converged && (lo + hi) / 2.0 != lambda)
            next = (lo + hi) / 2.0;
        if (next == lambda) {
            out.value = lambda;
            out.bracket_lo = lo;
            out.bracket_hi = hi;
            return out;
        }
        double next_value = s_form(sys, next, x);
        if (converged && std::abs(next_value) >= std::abs(value)) {
            out.value = lambda;
            out.bracket_lo = lo;
            out.bracket_hi = hi;
            return out;
        }
        lambda = next;
        value = next_value;
    }
    if (converged) {
        out.value = lambda;
        out.bracket_lo = lo;
        out.bracket_hi = hi;
        return out;
    }
    throw Error(ErrorCode::MaxIterations, "root refinement did not converge");
}

VmConstants vm_constants(const BlockSystem&, const EnclosureParams& params, double lo,
                         double hi) {
    if (!(params.mu < lo) || !(lo <= hi))
        throw Error(ErrorCode::IntervalNotAboveMu,
                    "need mu < lo <= hi, got mu = " + std::to_string(params.mu));
    const double dp = params.delta_plus;
    const double a = params.a, b = params.b;
    auto g = [&](double t) { return -1.0 + (b * t + a) / ((t - dp) * (t - dp - b)); };
    auto h = [&](double t) { return b / ((t - dp) * (t - dp - b)); };

    // Grid maximum with local refinement; g is smooth on the interval.
    auto grid_max = [&](auto&& f) {
        double best_x = lo, best = f(lo);
        const int cells = 1024;
        double a0 = lo, b0 = hi;
        for (int round = 0; round < 16; ++round) {
            double width = (b0 - a0) / cells;
            for (int i = 0; i <= cells; ++i) {
                double t = a0 + width * i;
                double v = f(t);
                if (v > best) {
                    best = v;
                    best_x = t;
                }
            }
            if (width <= 1e-6 * (1.0 + std::abs(hi))) break;
            a0 = std::max(lo, best_x - width);
            b0 = std::min(hi, best_x + width);
        }
        return best;
    };

    double c = grid_max(g);
    if (!(c < 0.0))
        throw Error(ErrorCode::NonNegativeC, "max of g on the interval is " + std::to_string(c));

    VmConstants out;
    out.delta = -c / 2.0;
    if (b == 0.0) {
        out.epsilon = 1.0;  // h vanishes identically; any positive value certifies
    } else {
        double h_max = grid_max(h);
        out.epsilon = (-c / 2.0) / h_max;
    }
    return out;
}

Matrix resolvent_blocks(const BlockSystem& sys, double lambda) {
    const Tolerances& tol = Tolerances::global();
    double sep = tol.sep * (1.0 + sys.norm_D());
    if (dist_sigma_D(sys, lambda) <= sep)
        throw Error(ErrorCode::LambdaInSpectrumD, "lambda = " + std::to_string(lambda));

    Matrix s = schur_matrix(sys, lambda);
    double s_norm = spectral_norm(s);
    if (min_singular(s) <= 1e-12 * std::max(1.0, s_norm))
        throw Error(ErrorCode::SingularSchur, "S(lambda) is numerically singular");

    const Eigen::Index n1 = sys.n1(), n2 = sys.n2();
    Matrix s_inv = s.inverse();
    // (D - lambda)^{-1} in the eigenbasis of D.
    Matrix d_inv = sys.spec_D.vectors;
    for (Eigen::Index j = 0; j < d_inv.cols(); ++j)
        d_inv.col(j) /= sys.spec_D.values[j] - lambda;
    d_inv = d_inv * sys.spec_D.vectors.transpose();

    Matrix f = d_inv * sys.B.transpose() * s_inv;
    Matrix b_dinv = sys.B * d_inv;

    Matrix r(n1 + n2, n1 + n2);
    r.topLeftCorner(n1, n1) = s_inv;
    r.topRightCorner(n1, n2) = -s_inv * b_dinv;
    r.bottomLeftCorner(n2, n1) = f;
    r.bottomRightCorner(n2, n2) = d_inv - f * b_dinv;
    return r;
}

}  // namespace jspectra
