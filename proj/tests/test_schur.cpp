#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jspectra/schur.hpp"
#include "test_support.hpp"

using namespace jspectra;
using namespace jspectra::testing;

namespace {

Vector vec1(double v) {
    Vector x(1);
    x << v;
    return x;
}

EnclosureParams params_b0(const BlockSystem& sys) {
    return enclosure_params(sys, min_a_for_b(sys, 0.0), 0.0);
}

}  // namespace

TEST_CASE("schur_at closed forms") {
    SchurSample s = schur_at(sys1(), 1.5);
    CHECK(s.S(0, 0) == doctest::Approx(3.0 - 1.5 - 1.0 / 1.5).epsilon(1e-14));
    CHECK(s.kappa_minus == 0);

    s = schur_at(sys2(), 1.2);
    CHECK(s.S(0, 0) == doctest::Approx(1.0 - 1.2 - 1.0 / 1.2).epsilon(1e-13));
    CHECK(s.S(1, 1) == doctest::Approx(3.8).epsilon(1e-14));
    CHECK(std::abs(s.S(0, 1)) <= 1e-14);
    CHECK(s.kappa_minus == 1);

    // Zero coupling: S(lambda) = A - lambda.
    Rng rng(21);
    Matrix a = random_symmetric(rng, 4);
    BlockSystem sys = build_system(a, Matrix::Zero(4, 3), random_symmetric(rng, 3));
    double lambda = sys.delta_plus + 2.0;
    s = schur_at(sys, lambda);
    CHECK((s.S - (a - lambda * Matrix::Identity(4, 4))).norm() <= 1e-12 * a.norm());

    CHECK_THROWS_AS(schur_at(sys1(), 0.0), Error);  // on sigma(D)
}

TEST_CASE("s_form closed forms and consistency with the matrix") {
    CHECK(s_form(sys1(), 2.0, vec1(1.0)) == doctest::Approx(0.5).epsilon(1e-14));
    double root = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(s_form(sys1(), root, vec1(1.0))) <= 1e-14);
    CHECK(s_form(sys0(), 2.0, vec1(1.0)) == doctest::Approx(-2.5).epsilon(1e-14));

    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        BlockSystem sys = random_system(rng, 4, 3);
        double lambda = sys.delta_plus + 0.3 + std::abs(rng.gaussian());
        Vector x = rng.gaussian_vector(4);
        double via_matrix = x.dot(schur_matrix(sys, lambda) * x);
        double via_form = s_form(sys, lambda, x);
        CHECK(std::abs(via_form - via_matrix) <=
              Tolerances::global().eig * std::max(1.0, std::abs(via_matrix)) *
                  std::max(1.0, sys.norm_A()));
    }

    CHECK_THROWS_AS(s_form(sys1(), -1.0, vec1(1.0)), Error);
}

TEST_CASE("s_form_deriv closed forms and finite differences") {
    CHECK(s_form_deriv(sys1(), 2.0, vec1(1.0)) == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(s_form_deriv(sys1(), 1.0, vec1(1.0)) == doctest::Approx(0.0));

    Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        BlockSystem sys = random_system(rng, 4, 3);
        Vector x = rng.unit_vector(4);
        double lambda = sys.delta_plus + 0.5 + std::abs(rng.gaussian());
        double h = 1e-5 * (1.0 + std::abs(lambda));
        double fd = (s_form(sys, lambda + h, x) - s_form(sys, lambda - h, x)) / (2.0 * h);
        double exact = s_form_deriv(sys, lambda, x);
        CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }

    // Zero coupling: the derivative is identically -|x|^2.
    BlockSystem sys = build_system(Matrix::Identity(3, 3), Matrix::Zero(3, 2),
                                   Matrix::Zero(2, 2));
    Rng rng2(35);
    Vector x = rng2.gaussian_vector(3);
    CHECK(s_form_deriv(sys, 2.0, x) == doctest::Approx(-x.squaredNorm()));
}

TEST_CASE("rayleigh_p closed forms") {
    EnclosureParams p1 = params_b0(sys1());
    RayleighValue r = rayleigh_p(sys1(), p1, vec1(1.0));
    REQUIRE(r.finite());
    CHECK(*r.value == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    EnclosureParams p0 = params_b0(sys0());
    r = rayleigh_p(sys0(), p0, vec1(1.0));
    CHECK_FALSE(r.finite());

    EnclosureParams p2 = params_b0(sys2());
    Vector e2 = Vector::Unit(2, 1);
    r = rayleigh_p(sys2(), p2, e2);
    REQUIRE(r.finite());
    CHECK(*r.value == doctest::Approx(5.0).epsilon(1e-12));

    CHECK_THROWS_AS(rayleigh_p(sys1(), p1, vec1(0.0)), Error);
}

TEST_CASE("rayleigh_p is scale invariant") {
    Rng rng(36);
    for (int trial = 0; trial < 100; ++trial) {
        BlockSystem sys = random_system(rng, 4, 3);
        EnclosureParams params = params_b0(sys);
        Vector x = rng.gaussian_vector(4);
        double c = rng.gaussian();
        if (std::abs(c) < 0.1 || x.norm() < 0.1) continue;
        RayleighValue r1 = rayleigh_p(sys, params, x);
        RayleighValue r2 = rayleigh_p(sys, params, Vector(c * x));
        CHECK(r1.finite() == r2.finite());
        if (r1.finite())
            CHECK(*r1.value == doctest::Approx(*r2.value).epsilon(1e-9));
    }
}

TEST_CASE("rayleigh_p residual contract") {
    Rng rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        BlockSystem sys = random_system(rng, 5, 4);
        EnclosureParams params = params_b0(sys);
        Vector x = rng.unit_vector(5);
        RayleighValue r = rayleigh_p(sys, params, x);
        if (!r.finite()) continue;
        CHECK(*r.value > params.mu);
        CHECK(std::abs(s_form(sys, *r.value, x)) <=
              Tolerances::global().root * (1.0 + std::abs(*r.value)) * 10.0);
    }
}

TEST_CASE("kappa_minus fixtures") {
    CHECK(kappa_minus(sys1(), 1.5) == 0);
    CHECK(kappa_minus(sys2(), 1.2) == 1);
    BlockSystem decoupled = build_system(Matrix::Identity(3, 3) * 4.0, Matrix::Zero(3, 2),
                                         Matrix::Zero(2, 2));
    CHECK(kappa_minus(decoupled, 2.0) == 0);  // gamma below alpha_minus
    CHECK_THROWS_AS(kappa_minus(sys1(), -3.0), Error);
}

TEST_CASE("vm_constants closed form and contract") {
    BlockSystem s1 = sys1();
    EnclosureParams p1 = params_b0(s1);
    VmConstants vm = vm_constants(s1, p1, 1.5, 3.0);
    // g(lambda) = -1 + 1/lambda^2 is decreasing, so c = g(1.5).
    CHECK(vm.delta == doctest::Approx((1.0 - 1.0 / 2.25) / 2.0).epsilon(1e-6));
    CHECK(vm.epsilon > 0.0);

    CHECK_THROWS_AS(vm_constants(s1, p1, 0.5, 3.0), Error);  // interval not above mu

    // A pair with b > 0 exercises the epsilon constraint.
    EnclosureParams pb = enclosure_params(s1, -0.5, 0.5);
    VmConstants vmb = vm_constants(s1, pb, 1.5, 3.0);
    CHECK(vmb.epsilon > 0.0);
    CHECK(vmb.delta > 0.0);

    // Contract: small form value forces a negative derivative.
    Rng rng(38);
    int exercised = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        double lambda = rng.uniform(1.5, 3.0);
        SchurSample sample = schur_at(s1, lambda);
        Vector x = rng.unit_vector(1);
        if (std::abs(s_form(s1, lambda, x)) > vmb.epsilon) continue;
        ++exercised;
        CHECK(s_form_deriv(s1, lambda, x) <= -vmb.delta + 1e-12);
        (void)sample;
    }
    CHECK(exercised > 100);
}

TEST_CASE("vm property on a coupled system") {
    Rng rng(39);
    BlockSystem sys = random_conda_system(rng, 5, 4);
    double b = 0.1;
    double a = min_a_for_b(sys, b);
    EnclosureParams params = enclosure_params(sys, a, b);
    double lo = params.mu + 0.2 * (1.0 + std::abs(params.mu));
    double hi = lo + 2.0;
    VmConstants vm = vm_constants(sys, params, lo, hi);
    int exercised = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        double lambda = rng.uniform(lo, hi);
        SchurSample sample = schur_at(sys, lambda);
        // Mix eigenvector-directed and random probes to hit the premise.
        Vector x;
        if (trial % 2 == 0) {
            Eigen::Index best = 0;
            sample.eig.values.cwiseAbs().minCoeff(&best);
            x = sample.eig.vectors.col(best) + 0.05 * rng.gaussian_vector(sys.n1());
        } else {
            x = rng.gaussian_vector(sys.n1());
        }
        x /= x.norm();
        if (std::abs(s_form(sys, lambda, x)) > vm.epsilon) continue;
        ++exercised;
        CHECK(s_form_deriv(sys, lambda, x) <= -vm.delta + 1e-10);
    }
    CHECK(exercised > 50);
}

TEST_CASE("spectral equivalence on fixtures and random systems") {
    Rng rng(40);
    std::vector<BlockSystem> systems{sys0(), sys1(), sys2()};
    for (int trial = 0; trial < 100; ++trial)
        systems.push_back(random_system(rng, 1 + static_cast<int>(rng.next_u64() % 6),
                                        1 + static_cast<int>(rng.next_u64() % 6)));
    for (const auto& sys : systems) {
        double m_norm = std::max(1.0, norm_M(sys));
        double sep_floor = Tolerances::global().sep * (1.0 + sys.norm_D());
        for (auto z : spectrum_M(sys).values) {
            if (std::abs(z.imag()) > Tolerances::global().eig * m_norm) continue;
            if (dist_sigma_D(sys, z.real()) <= sep_floor) continue;
            Matrix s = schur_matrix(sys, z.real());
            CHECK(min_singular(s) <= 1e-8 * std::max(1.0, spectral_norm(s)));
        }
    }
}

TEST_CASE("nullity equality on fixtures with known multiplicities") {
    // Decoupled double eigenvalue.
    Matrix a = Matrix::Identity(2, 2) * 3.0;
    BlockSystem sys = build_system(a, Matrix::Zero(2, 1), Matrix::Zero(1, 1));
    Matrix s = schur_matrix(sys, 3.0);
    SymEig eig = sym_eig(s);
    int nul_s = 0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        if (std::abs(eig.values[i]) <= 1e-10) ++nul_s;
    CHECK(nul_s == 2);
    Matrix m = assemble(sys).M - 3.0 * Matrix::Identity(3, 3);
    Eigen::JacobiSVD<Matrix> svd(m);
    int nul_m = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] <= 1e-10) ++nul_m;
    CHECK(nul_m == 2);

    // Coupled system with one simple eigenvalue at 5.
    Matrix a2(2, 2), b2(2, 1), d2(1, 1);
    a2 << 5.0, 0.0, 0.0, 5.0;
    b2 << 1.0, 0.0;
    d2 << 0.0;
    BlockSystem sys2c = build_system(a2, b2, d2);
    Matrix s2 = schur_matrix(sys2c, 5.0);
    SymEig eig2 = sym_eig(s2);
    nul_s = 0;
    for (Eigen::Index i = 0; i < eig2.values.size(); ++i)
        if (std::abs(eig2.values[i]) <= 1e-10) ++nul_s;
    CHECK(nul_s == 1);
    Matrix m2 = assemble(sys2c).M - 5.0 * Matrix::Identity(3, 3);
    Eigen::JacobiSVD<Matrix> svd2(m2);
    nul_m = 0;
    for (Eigen::Index i = 0; i < svd2.singularValues().size(); ++i)
        if (svd2.singularValues()[i] <= 1e-10) ++nul_m;
    CHECK(nul_m == 1);
}

TEST_CASE("kernel lift produces an eigenvector of M") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        BlockSystem sys = random_system(rng, 4, 3);
        double m_norm = std::max(1.0, norm_M(sys));
        for (auto z : spectrum_M(sys).values) {
            if (std::abs(z.imag()) > Tolerances::global().eig * m_norm) continue;
            if (dist_sigma_D(sys, z.real()) <= 1e-6) continue;
            SchurSample sample = schur_at(sys, z.real());
            // x: eigenvector of S(z) for the eigenvalue closest to zero.
            Eigen::Index idx = 0;
            sample.eig.values.cwiseAbs().minCoeff(&idx);
            Vector x = sample.eig.vectors.col(idx);
            Vector y = resolvent_D(sys, z.real(), Vector(sys.B.transpose() * x));
            Vector v(sys.n1() + sys.n2());
            v << x, y;
            Matrix m = assemble(sys).M;
            CHECK(((m - z.real() * Matrix::Identity(m.rows(), m.cols())) * v).norm() <=
                  1e-8 * m_norm * v.norm());
        }
    }
}

TEST_CASE("resolvent block formula matches the dense inverse") {
    // 2x2 fixture by hand.
    Matrix r = resolvent_blocks(sys1(), 1.5);
    Matrix expected(2, 2);
    expected << 1.2, 0.8, -0.8, -1.2;
    CHECK((r - expected).norm() <= 1e-12);

    // Zero coupling: block diagonal of the two resolvents.
    BlockSystem decoupled = build_system(Matrix::Identity(2, 2) * 3.0, Matrix::Zero(2, 2),
                                         Matrix::Zero(2, 2));
    Matrix rd = resolvent_blocks(decoupled, 1.0);
    Matrix expd = Matrix::Zero(4, 4);
    expd.topLeftCorner(2, 2) = Matrix::Identity(2, 2) * 0.5;
    expd.bottomRightCorner(2, 2) = Matrix::Identity(2, 2) * -1.0;
    CHECK((rd - expd).norm() <= 1e-12);

    Rng rng(42);
    int checked = 0;
    while (checked < 60) {
        BlockSystem sys = random_system(rng, 1 + static_cast<int>(rng.next_u64() % 5),
                                        1 + static_cast<int>(rng.next_u64() % 5));
        double lambda = 3.0 * rng.gaussian();
        if (dist_sigma_D(sys, lambda) < 1e-3) continue;
        Matrix m = assemble(sys).M;
        Matrix shifted = m - lambda * Matrix::Identity(m.rows(), m.cols());
        if (min_singular(shifted) < 1e-3) continue;
        ++checked;
        Matrix direct = shifted.inverse();
        Matrix blocks = resolvent_blocks(sys, lambda);
        CHECK((blocks - direct).norm() <= 1e-8 * direct.norm());
    }

    CHECK_THROWS_AS(resolvent_blocks(sys1(), 0.0), Error);                 // on sigma(D)
    double eigval = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK_THROWS_AS(resolvent_blocks(sys1(), eigval), Error);              // singular S
}

TEST_CASE("lambda_cap clears every curve crossing") {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        BlockSystem sys = random_system(rng, 4, 3);
        EnclosureParams params = params_b0(sys);
        double gamma0 = params.mu + 0.1 * (1.0 + std::abs(params.mu));
        double cap = lambda_cap(sys, params, gamma0);
        SymEig top = schur_at(sys, cap).eig;
        CHECK(top.max() < 0.0);  // all curves negative beyond the cap
    }
}
