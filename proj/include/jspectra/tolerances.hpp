#pragma once

namespace jspectra {

/// Numerical contracts shared by all modules.  The fields are relative
/// tolerances unless noted; the quantities they scale are stated at the
/// point of use.  `global()` is mutable only for the CLI's --tol-scale,
/// which is applied once at startup.
struct Tolerances {
    double eig = 1e-10;      // eigendecomposition residuals, relative
    double sym = 1e-12;      // symmetry checks, relative
    double psd = 1e-9;       // semidefiniteness slack
    double cluster = 1e-8;   // eigenvalue clustering, relative to the matrix norm
    double box = 1e-8;       // enclosure boundary slack, times (1 + |z|)
    double sep = 1e-10;      // admissible distance to sigma(D), times (1 + norm(D))
    double root = 1e-12;     // Rayleigh-functional root residual, times (1 + |lambda|)
    double cmp = 1e-8;       // absolute slack for inequality assertions
    double disc = 1e-6;      // discretization certificates, relative to norm(A)

    static Tolerances& global();

    void scale(double factor) {
        eig *= factor;
        sym *= factor;
        psd *= factor;
        cluster *= factor;
        box *= factor;
        sep *= factor;
        root *= factor;
        cmp *= factor;
        disc *= factor;
    }
};

}  // namespace jspectra
