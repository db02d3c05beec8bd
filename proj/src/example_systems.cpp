#include "jspectra/example_systems.hpp"

#include <cmath>

#include "jspectra/vareig.hpp"

namespace jspectra {

Vector interior_grid(int n) {
    const double h = 1.0 / (n + 1);
    Vector s(n);
    for (int i = 0; i < n; ++i) s[i] = (i + 1) * h;
    return s;
}

Matrix dirichlet_laplacian(int n) {
    const double h = 1.0 / (n + 1);
    const double scale = 1.0 / (h * h);
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2.0 * scale;
        if (i + 1 < n) {
            a(i, i + 1) = -scale;
            a(i + 1, i) = -scale;
        }
    }
    return a;
}

BlockSystem build_example1(const Example1Config& cfg) {
    if (cfg.n < 3) throw Error(ErrorCode::GridTooSmall, "n = " + std::to_string(cfg.n));
    Vector s = interior_grid(cfg.n);
    Matrix a = dirichlet_laplacian(cfg.n);
    Matrix b = Matrix::Zero(cfg.n, cfg.n);
    Matrix d = Matrix::Zero(cfg.n, cfg.n);
    for (int i = 0; i < cfg.n; ++i) {
        double wi = cfg.w(s[i]);
        if (wi < 0.0)
            throw Error(ErrorCode::NegativeWeight,
                        "w(" + std::to_string(s[i]) + ") = " + std::to_string(wi));
        b(i, i) = std::sqrt(wi);
        d(i, i) = cfg.u(s[i]);
    }
    return build_system(a, b, d);
}

BlockSystem build_example2(const Example2Config& cfg) {
    if (cfg.n < 3) throw Error(ErrorCode::GridTooSmall, "n = " + std::to_string(cfg.n));
    const int n = cfg.n;
    const double h = 1.0 / (n + 1);
    Vector s = interior_grid(n);

    Matrix a = dirichlet_laplacian(n);
    for (int i = 0; i < n; ++i) a(i, i) += cfg.q(s[i]);

    // Centered first difference with zero Dirichlet ghost values.
    Matrix g = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) g(i, i + 1) = 1.0 / (2.0 * h);
        if (i - 1 >= 0) g(i, i - 1) = -1.0 / (2.0 * h);
    }
    Matrix b_star = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) b_star.row(i) = cfg.v(s[i]) * g.row(i);

    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = cfg.u(s[i]);

    return build_system(a, b_star.transpose(), d);
}

std::vector<ConvergenceRow> refine_and_track(const Example1Config& cfg,
                                             const std::vector<int>& n_list, int count) {
    std::vector<ConvergenceRow> rows;
    for (int n : n_list) {
        Example1Config level = cfg;
        level.n = n;
        BlockSystem sys = build_example1(level);

        ConvergenceRow row;
        row.n = n;
        row.b = 0.0;
        row.a = min_a_for_b(sys, 0.0);
        EnclosureParams params = enclosure_params(sys, row.a, row.b);
        row.mu = params.mu;
        row.mu_plus = params.mu_plus;
        row.gamma0 = default_gamma0(params);
        row.kappa = kappa_minus(sys, row.gamma0);

        int k = std::min(count, static_cast<int>(sys.n1()) - row.kappa);
        VarEigResult var = variational_spectrum(sys, params, row.gamma0, k);
        BoundReport bounds =
            bounds_report(sys, params, var, row.a, row.b, max_ahat_for_bhat(sys, 0.0), 0.0);

        row.lambdas = var.eigenvalues;
        for (int i = 0; i < k; ++i) {
            row.est1_lower_margin.push_back(var.eigenvalues[i] - bounds.est1_lower[i]);
            row.est1_upper_margin.push_back(bounds.est1_upper[i] - var.eigenvalues[i]);
            row.asym_residual.push_back(bounds.asym_residual[i]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace jspectra
