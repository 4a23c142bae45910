#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qtda/types.hpp"

namespace qtda {

// Seeded generator with explicit uniform/normal samplers so that streams are
// reproducible independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return (engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {  // Box-Muller
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(theta);
        have_spare_ = true;
        return radius * std::cos(theta);
    }

    std::uint64_t next_seed() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline Eigen::VectorXcd random_complex_gaussian(int dim, Rng& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = std::complex<double>(rng.normal(), rng.normal());
    return v;
}

// Haar-random pure state: normalized complex standard Gaussian.
inline PureState haar_random_state(int dim, Rng& rng) {
    Eigen::VectorXcd v = random_complex_gaussian(dim, rng);
    while (v.norm() < 1e-12) v = random_complex_gaussian(dim, rng);
    return PureState(v / v.norm());
}

}  // namespace qtda
