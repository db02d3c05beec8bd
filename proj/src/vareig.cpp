#include "jspectra/vareig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jspectra/qnr.hpp"
#include "jspectra/rng.hpp"

namespace jspectra {

namespace {

void fix_sign(Vector& v) {
    double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12 * scale) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

}  // namespace

double default_gamma0(const EnclosureParams& params) {
    if (params.strictA && params.mu_plus) return (params.mu + *params.mu_plus) / 2.0;
    return params.mu + 0.01 * (1.0 + std::abs(params.mu));
}

std::pair<double, Vector> eigencurve(const BlockSystem& sys, int j, double lambda) {
    if (j < 1 || j > sys.n1())
        throw Error(ErrorCode::IndexOutOfRange, "curve index " + std::to_string(j));
    if (lambda <= sys.delta_plus + Tolerances::global().sep * (1.0 + sys.norm_D()))
        throw Error(ErrorCode::LambdaNotAboveDeltaPlus, "lambda = " + std::to_string(lambda));
    SchurSample sample = schur_at(sys, lambda);
    Vector x = sample.eig.vectors.col(j - 1);
    fix_sign(x);
    return {sample.eig.values[j - 1], x};
}

std::pair<double, Vector> solve_eigenvalue(const BlockSystem& sys,
                                           const EnclosureParams& params, double gamma0,
                                           int n, int* iterations_out) {
    if (!(gamma0 > params.mu))
        throw Error(ErrorCode::IntervalNotAboveMu, "gamma0 must exceed mu");
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be >= 1");
    const Tolerances& tol = Tolerances::global();

    const int kappa = kappa_minus(sys, gamma0);
    const int j = kappa + n;
    if (j > sys.n1())
        throw Error(ErrorCode::NoEigenvalue,
                    "curve index " + std::to_string(j) + " exceeds dim " +
                        std::to_string(sys.n1()));

    const double cap = lambda_cap(sys, params, gamma0);
    int iters = 0;

    struct CurvePoint {
        double rho;
        Vector x;
        double s_norm;
    };
    auto curve = [&](double lambda) {
        ++iters;
        SchurSample sample = schur_at(sys, lambda);
        Vector x = sample.eig.vectors.col(j - 1);
        fix_sign(x);
        return CurvePoint{sample.eig.values[j - 1], x, sample.eig.norm()};
    };

    CurvePoint at = curve(gamma0);
    if (at.rho < 0.0) {
        // Within the negative-count tolerance band: the root sits at gamma0.
        if (iterations_out) *iterations_out = iters;
        return {gamma0, at.x};
    }

    // Rayleigh-functional steps from the current curve eigenvector; the
    // bracket grows by doubling only while no sign change is known and
    // falls back to bisection whenever a candidate leaves it.
    double lo = gamma0;
    std::optional<double> hi;
    double lambda = gamma0;
    double step = 0.5 * (1.0 + std::abs(gamma0));
    for (int iter = 0; iter < 200; ++iter) {
        RayleighValue p = rayleigh_p(sys, params, at.x);
        // Candidates may sit a rounding error outside the bracket when the
        // iteration has reached its fixed point; re-evaluating there lets
        // the convergence test fire instead of degrading to bisection.
        bool fixed_point =
            p.finite() && std::abs(*p.value - lambda) <= tol.root * (1.0 + std::abs(lambda));
        bool candidate_ok =
            p.finite() && ((*p.value > lo && (!hi || *p.value <= *hi)) || fixed_point);
        double next;
        if (candidate_ok) {
            next = *p.value;
        } else if (hi) {
            next = (lo + *hi) / 2.0;
        } else {
            next = lambda + step;
            step *= 2.0;
            if (next > cap) {
                if (lo >= cap) throw Error(ErrorCode::NoEigenvalue, "no crossing below the cap");
                next = cap;
            }
        }

        CurvePoint at_next = curve(next);
        if (next >= lo && (!hi || next <= *hi)) {
            if (at_next.rho > 0.0)
                lo = next;
            else
                hi = next;
        }

        bool value_small = std::abs(at_next.rho) <= tol.eig * std::max(1.0, at_next.s_norm);
        bool step_small = std::abs(next - lambda) <= tol.root * (1.0 + std::abs(next)) ||
                          (hi && *hi - lo <= tol.root * (1.0 + std::abs(next)));
        lambda = next;
        at = at_next;
        if (value_small && step_small) {
            if (iterations_out) *iterations_out = iters;
            return {lambda, at.x};
        }
    }
    throw Error(ErrorCode::MaxIterations, "eigencurve iteration did not converge");
}

VarEigResult variational_spectrum(const BlockSystem& sys, const EnclosureParams& params,
                                  double gamma0, int count) {
    VarEigResult result;
    result.gamma0 = gamma0;
    result.kappa = kappa_minus(sys, gamma0);
    for (int n = 1; n <= count; ++n) {
        int iters = 0;
        auto [lambda, x] = solve_eigenvalue(sys, params, gamma0, n, &iters);
        result.eigenvalues.push_back(lambda);
        result.eigenvectors_x.push_back(x);
        result.converged.push_back(true);
        result.iterations.push_back(iters);
    }
    // The curves cross in order; tiny inversions from independent root
    // refinements are flattened.
    for (std::size_t i = 1; i < result.eigenvalues.size(); ++i)
        if (result.eigenvalues[i] < result.eigenvalues[i - 1])
            result.eigenvalues[i] = result.eigenvalues[i - 1];
    return result;
}

std::optional<double> subspace_max_p(const BlockSystem& sys, const EnclosureParams& params,
                                     const Matrix& V) {
    if (V.cols() < 1) throw Error(ErrorCode::EmptyInput, "V");
    Matrix gram = V.transpose() * V - Matrix::Identity(V.cols(), V.cols());
    if (gram.norm() > 1e-8) throw Error(ErrorCode::NotOrthonormal, "V");

    const double eps_mu = 1e-7 * (1.0 + std::abs(params.mu));
    const double lo0 = params.mu + eps_mu;
    const double cap = lambda_cap(sys, params, lo0);
    const Tolerances& tol = Tolerances::global();

    auto top = [&](double lambda) {
        Matrix proj = V.transpose() * schur_matrix(sys, lambda) * V;
        SymEig eig = sym_eig((proj + proj.transpose()) / 2.0);
        return std::pair<double, Vector>(eig.max(), eig.vectors.col(eig.values.size() - 1));
    };
    auto stop = [&](double lambda, double value) {
        return std::abs(value) <= tol.root * (1.0 + std::abs(lambda)) * 10.0;
    };

    auto [f_lo, c_lo] = top(lo0);
    if (f_lo < 0.0 && !stop(lo0, f_lo)) return std::nullopt;
    if (stop(lo0, f_lo)) return lo0;

    double lo = lo0, hi = lo0, f_hi = f_lo;
    double step = 0.5 * (1.0 + std::abs(lo0));
    Vector c = c_lo;
    while (f_hi > 0.0) {
        lo = hi;
        hi += step;
        step *= 2.0;
        if (hi > cap) {
            if (lo >= cap) throw Error(ErrorCode::MaxIterations, "no crossing below the cap");
            hi = cap;
        }
        std::tie(f_hi, c) = top(hi);
    }

    double lambda = (lo + hi) / 2.0;
    for (int iter = 0; iter < 200; ++iter) {
        auto [value, coeff] = top(lambda);
        if (value > 0.0)
            lo = lambda;
        else
            hi = lambda;
        if (stop(lambda, value)) return lambda;
        double deriv = s_form_deriv(sys, lambda, V * coeff);
        double next = lambda - value / deriv;
        if (!(deriv < 0.0) || next <= lo || next >= hi) next = (lo + hi) / 2.0;
        if (next == lambda) return lambda;
        lambda = next;
    }
    throw Error(ErrorCode::MaxIterations, "projected curve refinement did not converge");
}

WitnessReport minmax_witness_check(const BlockSystem& sys, const EnclosureParams& params,
                                   double gamma0, int n, int trials, std::uint64_t seed) {
    const Tolerances& tol = Tolerances::global();
    WitnessReport report;

    const int kappa = kappa_minus(sys, gamma0);
    const int dim = kappa + n;
    VarEigResult var = variational_spectrum(sys, params, gamma0, n);
    const double lambda_n = var.eigenvalues.back();

    // (i) no (kappa+n)-dimensional subspace goes below lambda_n
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        Matrix V = orthonormal_basis(rng.gaussian_matrix(sys.n1(), dim));
        if (V.cols() < dim) {
            ++report.subspace_violations;  // degenerate draw, count as failure
            continue;
        }
        ++report.subspace_trials;
        std::optional<double> value = subspace_max_p(sys, params, V);
        if (!value || *value < lambda_n - tol.cmp) ++report.subspace_violations;
    }

    // (ii) the eigenvector subspace attains it
    {
        SchurSample at_gamma = schur_at(sys, gamma0);
        Matrix cols(sys.n1(), dim);
        for (int k = 0; k < kappa; ++k) cols.col(k) = at_gamma.eig.vectors.col(k);
        for (int k = 0; k < n; ++k) cols.col(kappa + k) = var.eigenvectors_x[k];
        Matrix V = orthonormal_basis(cols);
        std::optional<double> value =
            V.cols() == dim ? subspace_max_p(sys, params, V) : std::nullopt;
        report.attained_value = value ? *value : -std::numeric_limits<double>::infinity();
        report.attainment_ok = value && *value <= lambda_n + tol.cmp &&
                               *value >= lambda_n - tol.cmp;
    }

    // (iii) below every (kappa+n-1)-dimensional constraint space some
    // direction stays at or below lambda_n
    const int constraint_dim = dim - 1;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed ^ 0x5bf03635ULL, static_cast<std::uint64_t>(t));
        Matrix W;  // orthonormal basis of the admissible directions
        if (constraint_dim == 0) {
            W = Matrix::Identity(sys.n1(), sys.n1());
        } else {
            if (constraint_dim >= sys.n1()) break;
            Matrix L = orthonormal_basis(rng.gaussian_matrix(sys.n1(), constraint_dim));
            Eigen::HouseholderQR<Matrix> qr(L);
            Matrix q = qr.householderQ();
            W = q.rightCols(sys.n1() - L.cols());
        }
        ++report.constraint_trials;

        double best = std::numeric_limits<double>::infinity();
        // Deterministic witness: the bottom direction of the compressed
        // Schur complement at lambda_n.
        {
            Matrix proj = W.transpose() * schur_matrix(sys, lambda_n) * W;
            SymEig eig = sym_eig((proj + proj.transpose()) / 2.0);
            Vector x = W * eig.vectors.col(0);
            RayleighValue p = rayleigh_p(sys, params, x);
            best = p.finite() ? *p.value : -std::numeric_limits<double>::infinity();
        }
        for (int s = 0; s < 16 && best > lambda_n + tol.cmp; ++s) {
            Vector x = W * rng.unit_vector(W.cols());
            RayleighValue p = rayleigh_p(sys, params, x);
            double value = p.finite() ? *p.value : -std::numeric_limits<double>::infinity();
            best = std::min(best, value);
        }
        if (best > lambda_n + tol.cmp) ++report.constraint_violations;
    }
    return report;
}

LambdaPlusReport lambda_plus_minmax_check(const BlockSystem& sys,
                                          const EnclosureParams& params, double gamma0,
                                          int trials, std::uint64_t seed) {
    (void)gamma0;
    const Tolerances& tol = Tolerances::global();
    LambdaPlusReport report;
    report.samples = trials;

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed ^ 0x9a1fb3d7ULL, static_cast<std::uint64_t>(t));
        Vector x = rng.unit_vector(sys.n1());
        Vector bx = sys.B.transpose() * x;
        RayleighValue p = rayleigh_p(sys, params, x);

        if (p.finite()) {
            ++report.finite_cases;
            const double px = *p.value;
            // Decoupled x: the infimum is attained at the ground state of D.
            bool coupled = bx.norm() > 1e-14 * std::max(1.0, spectral_norm(sys.B));
            Vector y_star = coupled ? Vector(resolvent_D(sys, px, bx))
                                    : Vector(sys.spec_D.vectors.col(0));
            Complex attained = lambda_pm(sys, x, y_star).lambda_plus;
            double err = std::abs(attained - Complex(px, 0.0)) / (1.0 + std::abs(px));
            report.max_attained_error = std::max(report.max_attained_error, err);
            for (int s = 0; s < 100; ++s) {
                Vector y = rng.unit_vector(sys.n2());
                Complex lp = lambda_pm(sys, x, y).lambda_plus;
                if (lp.real() < px - tol.cmp) ++report.undercut_violations;
            }
        } else {
            ++report.infinite_cases;
            double best = std::numeric_limits<double>::infinity();
            // Resolvent-directed candidates approach the infimum.
            for (double offset : {0.5 * tol.cmp, 1e-7 * (1.0 + std::abs(params.mu)),
                                  1e-5 * (1.0 + std::abs(params.mu))}) {
                if (bx.norm() == 0.0) break;
                Vector y = resolvent_D(sys, params.mu + offset, bx);
                if (y.norm() == 0.0) continue;
                best = std::min(best, lambda_pm(sys, x, y).lambda_plus.real());
            }
            for (int s = 0; s < 100; ++s) {
                Vector y = rng.unit_vector(sys.n2());
                best = std::min(best, lambda_pm(sys, x, y).lambda_plus.real());
            }
            if (best > params.mu + tol.cmp) ++report.infinite_violations;
        }
    }
    return report;
}

BoundReport bounds_report(const BlockSystem& sys, const EnclosureParams& params,
                          const VarEigResult& result, double a, double b, double a_hat,
                          double b_hat) {
    const Tolerances& tol = Tolerances::global();
    BoundReport report;
    report.nu = sys.spec_A.values;
    const double dp = params.delta_plus;
    const double dm = params.delta_minus;

    for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
        int idx = result.kappa + static_cast<int>(i) + 1;  // 1-based index into nu
        if (idx > sys.n1())
            throw Error(ErrorCode::IndexExceedsNu, "kappa + n = " + std::to_string(idx));
        const double nu = report.nu[idx - 1];
        const double lambda_n = result.eigenvalues[i];

        double disc1 = std::pow((nu - dp) / 2.0, 2) - b * nu - a;
        report.est1_lower.push_back((nu + dp) / 2.0 + std::sqrt(std::max(disc1, 0.0)));
        report.est1_upper.push_back(nu);

        double disc2 = std::pow((nu - dm) / 2.0, 2) - b_hat * nu - a_hat;
        if (disc2 >= -tol.psd) {
            report.est2_upper.push_back((nu + dm) / 2.0 + std::sqrt(std::max(disc2, 0.0)));
        } else {
            report.est2_upper.push_back(std::nullopt);
            report.discr_ok = false;
        }

        double denom = nu - dp;
        double model = nu - b - (b * b + b * dp + a) / denom;
        report.asym_residual.push_back(lambda_n - model);
    }
    return report;
}

}  // namespace jspectra
