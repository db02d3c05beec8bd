#include "jspectra/enclosure.hpp"

#include <cmath>
#include <limits>

namespace jspectra {

namespace {

double positive_part(double t) { return t > 0.0 ? t : 0.0; }

}  // namespace

double min_a_for_b(const BlockSystem& sys, double b) {
    Matrix g = sys.B * sys.B.transpose() - b * sys.A;
    return sym_eig(g).max();
}

double max_ahat_for_bhat(const BlockSystem& sys, double b_hat) {
    Matrix g = sys.B * sys.B.transpose() - b_hat * sys.A;
    return sym_eig(g).min();
}

EnclosureParams enclosure_params(const BlockSystem& sys, double a, double b, bool d_unbounded) {
    // Certify the pair before deriving anything from it.
    Matrix residual = a * Matrix::Identity(sys.n1(), sys.n1()) + b * sys.A -
                      sys.B * sys.B.transpose();
    double min_eig = sym_eig(residual).min();
    if (min_eig < -Tolerances::global().psd * sys.norm_A() - Tolerances::global().psd)
        throw Error(ErrorCode::InvalidBound,
                    "a I + b A - B B^T has eigenvalue " + std::to_string(min_eig));

    EnclosureParams p;
    p.alpha_minus = sys.alpha_minus;
    p.delta_plus = sys.delta_plus;
    p.delta_minus = sys.delta_minus;
    p.a = a;
    p.b = b;
    p.d_unbounded = d_unbounded;

    const double disc = b * p.delta_plus + b * b + a;
    const double root = std::sqrt(positive_part(disc));
    const double half_sep = (p.alpha_minus - p.delta_plus) / 2.0;

    p.condA1 = disc <= 0.0 && b > 0.0;
    p.condA2 = half_sep >= b + root;
    p.condA = p.condA1 || p.condA2;
    p.strictA = disc < 0.0 || half_sep > b + root;

    p.mu = p.delta_plus + b + root;
    p.xi1 = p.alpha_minus - std::max(b / 2.0, std::sqrt(positive_part(b * p.alpha_minus + a)));
    if (!d_unbounded) {
        p.xi2 = (p.alpha_minus + p.delta_minus) / 2.0;
        p.mu_minus = std::min(p.alpha_minus, p.delta_minus);
        p.xi_minus = std::max(p.xi1, *p.xi2);
    } else {
        p.xi_minus = p.xi1;
    }

    if (p.condA1 && !p.condA2) {
        p.mu_plus = -a / b;
    } else if (p.condA2 && !p.condA1) {
        p.mu_plus = p.alpha_minus - b - root;
    } else if (p.condA1 && p.condA2) {
        p.mu_plus = std::max(-a / b, p.alpha_minus - b);
    }

    p.eta = std::sqrt(positive_part(disc - std::pow(positive_part(half_sep - b), 2)));
    return p;
}

bool in_enclosure(Complex z, const EnclosureParams& p) {
    const double tol = Tolerances::global().box * (1.0 + std::abs(z));
    const double re = z.real();
    const double im = std::abs(z.imag());
    if (p.condA) {
        if (im > tol) return false;
        bool lower = p.d_unbounded ? re <= p.mu + tol
                                   : (re >= *p.mu_minus - tol && re <= p.mu + tol);
        bool upper = p.mu_plus && re >= *p.mu_plus - tol;
        return lower || upper;
    }
    if (im <= tol) return p.d_unbounded || re >= *p.mu_minus - tol;
    return re >= p.xi_minus - tol && re <= p.mu + tol && im <= p.eta + tol;
}

double enclosure_margin(Complex z, const EnclosureParams& p) {
    const double re = z.real();
    const double im = std::abs(z.imag());
    const double inf = std::numeric_limits<double>::infinity();
    // On a real branch a nonzero imaginary part counts against the margin.
    auto real_branch = [&](double lo, double hi) {
        return std::min(std::min(re - lo, hi - re), im > 0.0 ? -im : inf);
    };
    if (p.condA) {
        double lower = real_branch(p.d_unbounded ? -inf : *p.mu_minus, p.mu);
        double upper = p.mu_plus ? real_branch(*p.mu_plus, inf) : -inf;
        return std::max(lower, upper);
    }
    double real_part = real_branch(p.d_unbounded ? -inf : *p.mu_minus, inf);
    double box = std::min(std::min(re - p.xi_minus, p.mu - re), p.eta - im);
    return std::max(real_part, box);
}

std::vector<double> default_b_grid(const BlockSystem& sys) {
    std::vector<double> grid{0.0};
    double norm_b = spectral_norm(sys.B);
    double norm_a = sys.norm_A();
    if (norm_b > 0.0 && norm_a > 0.0) {
        double base = norm_b * norm_b / norm_a;
        for (int k = -6; k <= 6; ++k) grid.push_back(std::ldexp(base, k));
    }
    return grid;
}

OptimizedBound optimize_bound(const BlockSystem& sys, const std::vector<double>& b_grid) {
    if (b_grid.empty()) throw Error(ErrorCode::EmptyGrid, "no b values to try");
    bool have = false;
    OptimizedBound best;
    for (double b : b_grid) {
        if (b < 0.0) continue;
        double a = min_a_for_b(sys, b);
        EnclosureParams params = enclosure_params(sys, a, b);
        bool better;
        if (!have) {
            better = true;
        } else if (params.condA != best.params.condA) {
            better = params.condA;
        } else if (params.condA) {
            better = params.gap() > best.params.gap();
        } else if (params.eta != best.params.eta) {
            better = params.eta < best.params.eta;
        } else {
            better = params.mu < best.params.mu;
        }
        if (better) {
            best = OptimizedBound{a, b, params};
            have = true;
        }
    }
    if (!have) throw Error(ErrorCode::EmptyGrid, "no admissible b >= 0 in grid");
    return best;
}

NottBound nott_bound(double a, double b, double t, double delta) {
    NottBound out;
    double half = (t - delta) / 2.0;
    out.premise = half * half <= b * t + a;
    if (!out.premise) {
        out.bound = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    double disc = b * delta + b * b + a;
    out.bound = b + std::sqrt(positive_part(disc));
    return out;
}

}  // namespace jspectra
