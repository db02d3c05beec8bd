#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jspectra/enclosure.hpp"
#include "test_support.hpp"

using namespace jspectra;
using namespace jspectra::testing;

TEST_CASE("min_a_for_b closed forms") {
    CHECK(min_a_for_b(sys1(), 0.0) == doctest::Approx(1.0));
    CHECK(min_a_for_b(sys2(), 0.0) == doctest::Approx(1.0));

    // Zero coupling: a = -b * alpha_minus.
    Matrix a(2, 2), b(2, 1), d(1, 1);
    a << 2.0, 0.0, 0.0, 4.0;
    b.setZero();
    d << 0.0;
    BlockSystem decoupled = build_system(a, b, d);
    for (double bb : {0.0, 0.5, 2.0})
        CHECK(min_a_for_b(decoupled, bb) == doctest::Approx(-bb * 2.0));
}

TEST_CASE("max_ahat_for_bhat closed forms") {
    CHECK(max_ahat_for_bhat(sys1(), 0.0) == doctest::Approx(1.0));
    CHECK(max_ahat_for_bhat(sys2(), 0.0) == doctest::Approx(0.0));
    Matrix a(1, 1), b(1, 1), d(1, 1);
    a << 1.0;
    b << 0.0;
    d << 0.0;
    CHECK(max_ahat_for_bhat(build_system(a, b, d), 0.0) == doctest::Approx(0.0));
}

TEST_CASE("min_a_for_b soundness over random systems") {
    Rng rng(2024);
    const double tol = Tolerances::global().psd;
    for (int trial = 0; trial < 500; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_u64() % 8);
        int n2 = 1 + static_cast<int>(rng.next_u64() % 8);
        BlockSystem sys = random_system(rng, n1, n2);
        double b = std::abs(rng.gaussian());
        double a = min_a_for_b(sys, b);
        CHECK(a + b * sys.alpha_minus >= -tol * std::max(1.0, sys.norm_A()));
        for (int k = 0; k < 200; ++k) {
            Vector x = rng.gaussian_vector(n1);
            double lhs = (sys.B.transpose() * x).squaredNorm();
            double rhs = a * x.squaredNorm() + b * x.dot(sys.A * x);
            CHECK(lhs <= rhs + tol * x.squaredNorm() * std::max(1.0, sys.norm_A()));
        }
    }
}

TEST_CASE("enclosure constants for the fixtures") {
    SUBCASE("sys1") {
        EnclosureParams p = enclosure_params(sys1(), 1.0, 0.0);
        CHECK(p.condA2);
        CHECK_FALSE(p.condA1);
        CHECK(p.condA);
        CHECK(p.strictA);
        CHECK(p.mu == doctest::Approx(1.0));
        REQUIRE(p.mu_plus.has_value());
        CHECK(*p.mu_plus == doctest::Approx(2.0));
        REQUIRE(p.mu_minus.has_value());
        CHECK(*p.mu_minus == doctest::Approx(0.0));
        CHECK(p.xi1 == doctest::Approx(2.0));
        CHECK(*p.xi2 == doctest::Approx(1.5));
        CHECK(p.xi_minus == doctest::Approx(2.0));
        CHECK(p.eta == doctest::Approx(0.0));
    }
    SUBCASE("sys0") {
        EnclosureParams p = enclosure_params(sys0(), 1.0, 0.0);
        CHECK_FALSE(p.condA);
        CHECK(p.mu == doctest::Approx(1.0));
        CHECK(p.eta == doctest::Approx(1.0));
        CHECK(p.xi1 == doctest::Approx(-1.0));
        CHECK(*p.xi2 == doctest::Approx(0.0));
        CHECK(p.xi_minus == doctest::Approx(0.0));
        CHECK(*p.mu_minus == doctest::Approx(0.0));
        CHECK_FALSE(p.mu_plus.has_value());
    }
    SUBCASE("sys2") {
        EnclosureParams p = enclosure_params(sys2(), 1.0, 0.0);
        CHECK_FALSE(p.condA);
        CHECK(p.mu == doctest::Approx(1.0));
        CHECK(p.eta == doctest::Approx(std::sqrt(0.75)));
        CHECK(p.xi_minus == doctest::Approx(0.5));
    }
}

TEST_CASE("enclosure_params rejects an uncertified pair") {
    try {
        enclosure_params(sys1(), -5.0, 0.0);
        FAIL("expected InvalidBound");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidBound);
    }
}

TEST_CASE("in_enclosure membership on the fixtures") {
    EnclosureParams p1 = enclosure_params(sys1(), 1.0, 0.0);
    CHECK(in_enclosure(Complex(0.3820, 0.0), p1));
    CHECK_FALSE(in_enclosure(Complex(1.5, 0.0), p1));
    CHECK(in_enclosure(Complex(2.618, 0.0), p1));
    CHECK_FALSE(in_enclosure(Complex(2.0, 0.5), p1));

    EnclosureParams p0 = enclosure_params(sys0(), 1.0, 0.0);
    CHECK(in_enclosure(Complex(0.0, 1.0), p0));  // box boundary
    CHECK(in_enclosure(Complex(0.0, -1.0), p0));
    CHECK_FALSE(in_enclosure(Complex(0.0, 1.1), p0));
    CHECK(in_enclosure(Complex(5.0, 0.0), p0));  // real ray
    CHECK_FALSE(in_enclosure(Complex(-0.5, 0.0), p0));
}

TEST_CASE("optimize_bound picks the widest certified gap") {
    // At b = 0.5 the minimal a is -0.5, both gap inequalities hold and the
    // gap (0.5, 2.5) is the widest of the three candidates.
    OptimizedBound best = optimize_bound(sys1(), {0.0, 0.5, 1.0});
    CHECK(best.b == doctest::Approx(0.5));
    CHECK(best.a == doctest::Approx(-0.5));
    CHECK(best.params.condA);
    CHECK(best.params.gap() == doctest::Approx(2.0));

    OptimizedBound only_b0 = optimize_bound(sys0(), {0.0});
    CHECK(only_b0.a == doctest::Approx(1.0));
    CHECK_FALSE(only_b0.params.condA);

    CHECK_THROWS_AS(optimize_bound(sys1(), {}), Error);
}

TEST_CASE("optimize_bound on zero coupling reduces to the diagonal gap") {
    Matrix a(2, 2), b(2, 1), d(1, 1);
    a << 2.0, 0.0, 0.0, 4.0;
    b.setZero();
    d << 0.0;
    BlockSystem sys = build_system(a, b, d);
    OptimizedBound best = optimize_bound(sys, default_b_grid(sys));
    CHECK(best.params.condA);  // alpha_minus = 2 > 0 = delta_plus
    CHECK(best.params.condA2);
}

TEST_CASE("unbounded-D flag switches to the half-line branches") {
    EnclosureParams p = enclosure_params(sys1(), 1.0, 0.0, /*d_unbounded=*/true);
    CHECK(p.d_unbounded);
    CHECK_FALSE(p.mu_minus.has_value());
    CHECK_FALSE(p.xi2.has_value());
    CHECK(p.xi_minus == p.xi1);
    // (-inf, mu] branch admits arbitrarily negative reals now.
    CHECK(in_enclosure(Complex(-100.0, 0.0), p));
    CHECK_FALSE(in_enclosure(Complex(1.5, 0.0), p));

    EnclosureParams p0 = enclosure_params(sys0(), 1.0, 0.0, /*d_unbounded=*/true);
    CHECK(in_enclosure(Complex(-100.0, 0.0), p0));     // real line
    CHECK(in_enclosure(Complex(0.0, 1.0), p0));        // box unchanged
    CHECK_FALSE(in_enclosure(Complex(0.0, 1.5), p0));
}

TEST_CASE("eta vanishes exactly when the gap condition holds") {
    Rng rng(4711);
    for (int trial = 0; trial < 300; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_u64() % 6);
        int n2 = 1 + static_cast<int>(rng.next_u64() % 6);
        BlockSystem sys = (trial % 2 == 0) ? random_system(rng, n1, n2)
                                           : random_conda_system(rng, n1, n2);
        double b = (trial % 3 == 0) ? 0.0 : std::abs(rng.gaussian());
        EnclosureParams p = enclosure_params(sys, min_a_for_b(sys, b), b);
        CHECK((p.eta == 0.0) == p.condA);
        if (p.condA && spectral_norm(sys.B) > 0.0) {
            // ordering chain of the gap edges
            CHECK(sys.delta_plus < p.mu);
            REQUIRE(p.mu_plus.has_value());
            CHECK(p.mu <= *p.mu_plus + 1e-12);
            CHECK(*p.mu_plus <= sys.alpha_minus + 1e-12);
        }
    }
}

TEST_CASE("mu is monotone in a") {
    Rng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        BlockSystem sys = random_conda_system(rng, 3, 3);
        double b = std::abs(rng.gaussian());
        double a = min_a_for_b(sys, b);
        EnclosureParams base = enclosure_params(sys, a, b);
        EnclosureParams bumped = enclosure_params(sys, a + 0.5, b);
        CHECK(bumped.mu >= base.mu - 1e-12);
    }
}

TEST_CASE("nott_bound") {
    NottBound r = nott_bound(1.0, 0.0, 1.0, 0.0);
    CHECK(r.premise);
    CHECK(r.bound == doctest::Approx(1.0));

    r = nott_bound(1.0, 0.0, 3.0, 0.0);
    CHECK_FALSE(r.premise);
    CHECK(std::isnan(r.bound));

    r = nott_bound(0.5, 0.7, 2.0, 2.0);  // t = delta, a >= 0
    CHECK(r.premise);
    CHECK(0.0 <= r.bound);
}

TEST_CASE("quadratic-root bound property") {
    Rng rng(31337);
    int hits = 0;
    bool ok = true;
    for (int trial = 0; trial < 100000; ++trial) {
        double a = 4.0 * rng.gaussian();
        double b = std::abs(rng.gaussian());
        double t = 4.0 * rng.gaussian();
        double delta = 4.0 * rng.gaussian();
        NottBound r = nott_bound(a, b, t, delta);
        if (!r.premise) continue;
        ++hits;
        ok = ok && b * delta + b * b + a >= -1e-12;
        ok = ok && (t - delta) / 2.0 <= r.bound + 1e-12;
    }
    CHECK(ok);
    CHECK(hits > 1000);  // the premise must actually trigger
}

TEST_CASE("spectral enclosure over random systems") {
    Rng rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_u64() % 12);
        int n2 = 1 + static_cast<int>(rng.next_u64() % 12);
        BlockSystem sys = random_system(rng, n1, n2);
        OptimizedBound best = optimize_bound(sys, default_b_grid(sys));
        for (auto z : spectrum_M(sys).values) CHECK(in_enclosure(z, best.params));
    }
}

TEST_CASE("realness under the gap condition") {
    Rng rng(888);
    for (int trial = 0; trial < 200; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_u64() % 8);
        int n2 = 1 + static_cast<int>(rng.next_u64() % 8);
        BlockSystem sys = random_conda_system(rng, n1, n2);
        EnclosureParams p = enclosure_params(sys, min_a_for_b(sys, 0.0), 0.0);
        REQUIRE(p.condA);
        double scale = norm_M(sys);
        for (auto z : spectrum_M(sys).values) CHECK(std::abs(z.imag()) <= 1e-8 * scale);
    }
}

TEST_CASE("bounded-coupling interval enclosure") {
    Rng rng(999);
    int usable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_u64() % 6);
        int n2 = 1 + static_cast<int>(rng.next_u64() % 6);
        BlockSystem sys = random_conda_system(rng, n1, n2, 0.2);
        double norm_b = spectral_norm(sys.B);
        if (norm_b > (sys.alpha_minus - sys.delta_plus) / 2.0) continue;
        ++usable;
        for (auto z : spectrum_M(sys).values) {
            CHECK(std::abs(z.imag()) <= 1e-8 * std::max(1.0, norm_M(sys)));
            bool low = z.real() <= sys.delta_plus + norm_b + 1e-8;
            bool high = z.real() >= sys.alpha_minus - norm_b - 1e-8;
            CHECK((low || high));
        }
    }
    CHECK(usable > 100);
}

TEST_CASE("default_b_grid shape") {
    auto grid = default_b_grid(sys1());
    CHECK(grid.size() == 14);
    CHECK(grid[0] == 0.0);
    Matrix zero2 = Matrix::Zero(2, 2);
    auto zero_b = default_b_grid(build_system(zero2, zero2, zero2));
    CHECK(zero_b.size() == 1);
}
