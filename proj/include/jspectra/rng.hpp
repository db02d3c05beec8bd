#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace jspectra {

/// Deterministic 64-bit generator (splitmix64 core).  Used instead of the
/// standard distributions so that sampled values are identical across
/// platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent substream for item `index` of a seeded sampling run.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
        std::uint64_t s = mixer.next_u64();
        return Rng(s ^ mixer.next_u64());
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1).
    double uniform01() {
        // 53 random mantissa bits; offset by half an ulp to stay away from 0.
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi].
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform01();
        double v = uniform01();
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index n) {
        Eigen::VectorXd x(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] = gaussian();
        return x;
    }

    /// Gaussian direction normalized to unit length.
    Eigen::VectorXd unit_vector(Eigen::Index n) {
        Eigen::VectorXd x = gaussian_vector(n);
        double nrm = x.norm();
        while (nrm < 1e-12) {
            x = gaussian_vector(n);
            nrm = x.norm();
        }
        return x / nrm;
    }

    Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = gaussian();
        return m;
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace jspectra
