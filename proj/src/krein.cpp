#include "jspectra/krein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jspectra {

double indefinite_inner(Eigen::Index n1, const Vector& v, const Vector& w) {
    if (v.size() != w.size() || n1 > v.size())
        throw Error(ErrorCode::DimensionMismatch, "indefinite inner product");
    return v.head(n1).dot(w.head(n1)) - v.tail(v.size() - n1).dot(w.tail(w.size() - n1));
}

double indefinite_inner(const BlockSystem& sys, const Vector& v, const Vector& w) {
    if (v.size() != sys.n1() + sys.n2())
        throw Error(ErrorCode::DimensionMismatch, "indefinite inner product");
    return indefinite_inner(sys.n1(), v, w);
}

std::vector<PositiveTypeVerdict> positive_type_check(const BlockSystem& sys,
                                                     const EnclosureParams& params) {
    const Tolerances& tol = Tolerances::global();
    Matrix m = assemble(sys).M;
    const double m_norm = m.norm();
    GenEig spec = gen_eig(m);

    // Real eigenvalues above mu, clustered by the relative tolerance.
    std::vector<double> reals;
    for (Complex z : spec.values)
        if (std::abs(z.imag()) <= tol.eig * std::max(1.0, m_norm) && z.real() > params.mu)
            reals.push_back(z.real());
    std::sort(reals.begin(), reals.end());

    std::vector<PositiveTypeVerdict> verdicts;
    const double cluster_tol = tol.cluster * std::max(1.0, m_norm);
    std::size_t i = 0;
    while (i < reals.size()) {
        std::size_t k = i + 1;
        while (k < reals.size() && reals[k] - reals[k - 1] <= cluster_tol) ++k;
        const int mult = static_cast<int>(k - i);
        double mean = 0.0;
        for (std::size_t t = i; t < k; ++t) mean += reals[t];
        mean /= mult;

        // Invariant-subspace basis: for eigenvalues of positive type the
        // cluster is semisimple, so the numerical kernel has full multiplicity.
        Eigen::JacobiSVD<Matrix> svd(m - mean * Matrix::Identity(m.rows(), m.cols()),
                                     Eigen::ComputeFullV);
        Matrix basis = svd.matrixV().rightCols(mult);

        Matrix gram(mult, mult);
        for (int r = 0; r < mult; ++r)
            for (int c = 0; c < mult; ++c)
                gram(r, c) = indefinite_inner(sys.n1(), basis.col(r), basis.col(c));
        gram = (gram + gram.transpose()) / 2.0;
        SymEig gram_eig = sym_eig(gram);

        PositiveTypeVerdict v;
        v.eigenvalue = mean;
        v.multiplicity = mult;
        v.min_gram_eigenvalue = gram_eig.min();
        v.positive = gram_eig.min() > tol.psd * gram_eig.norm();
        verdicts.push_back(v);
        i = k;
    }
    return verdicts;
}

std::pair<bool, double> krein_nonneg_check(const BlockSystem& sys,
                                           const EnclosureParams& params, double gamma) {
    const Tolerances& tol = Tolerances::global();
    if (!params.strictA)
        throw Error(ErrorCode::StrictANotSatisfied, "strict gap condition required");
    if (!params.mu_plus || !(gamma > params.mu) || !(gamma < *params.mu_plus))
        throw Error(ErrorCode::GammaOutsideGap, "gamma = " + std::to_string(gamma));

    AssembledM am = assemble(sys);
    const double m_norm = am.M.norm();

    // gamma must be in the resolvent set.
    GenEig spec = gen_eig(am.M);
    double dist = std::numeric_limits<double>::infinity();
    for (Complex z : spec.values) dist = std::min(dist, std::abs(z - Complex(gamma, 0.0)));
    if (dist <= tol.sep * (1.0 + m_norm))
        throw Error(ErrorCode::GammaOutsideGap, "gamma is an eigenvalue of M");

    Matrix k = am.J * (am.M - gamma * Matrix::Identity(am.M.rows(), am.M.cols()));
    k = (k + k.transpose()) / 2.0;
    double min_eig = sym_eig(k).min();
    return {min_eig >= -tol.psd * m_norm, min_eig};
}

int nonreal_count(const BlockSystem& sys) {
    const Tolerances& tol = Tolerances::global();
    AssembledM am = assemble(sys);
    GenEig spec = gen_eig(am.M);
    int count = 0;
    for (Complex z : spec.values)
        if (std::abs(z.imag()) > tol.eig * std::max(1.0, am.M.norm())) ++count;
    return count;
}

}  // namespace jspectra
