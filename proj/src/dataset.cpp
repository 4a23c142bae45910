#include "qtda/dataset.hpp"

#include <cmath>

#include "qtda/rng.hpp"

namespace qtda {

PointCloud roots_of_unity(int n, double r) {
    if (n < 2 || !(r > 0.0)) throw std::invalid_argument("roots_of_unity: need n >= 2, r > 0");
    Eigen::MatrixXd pts(n, 2);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n;
        pts(k, 0) = r * std::cos(theta);
        pts(k, 1) = r * std::sin(theta);
    }
    return PointCloud(std::move(pts));
}

PointCloud noisy_circle(int n, double r, double sigma, std::uint64_t seed) {
    if (n < 2 || !(r > 0.0) || sigma < 0.0)
        throw std::invalid_argument("noisy_circle: need n >= 2, r > 0, sigma >= 0");
    Rng rng(seed);
    Eigen::MatrixXd pts(n, 2);
    for (int k = 0; k < n; ++k) {
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const double radius = r + sigma * rng.normal();
        pts(k, 0) = radius * std::cos(theta);
        pts(k, 1) = radius * std::sin(theta);
    }
    return PointCloud(std::move(pts));
}

DistanceMatrix geodesic_circle_matrix(int n, double r) {
    if (n < 2 || !(r > 0.0))
        throw std::invalid_argument("geodesic_circle_matrix: need n >= 2, r > 0");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int gap = std::min(j - i, n - (j - i));
            d(i, j) = d(j, i) = r * 2.0 * M_PI * gap / n;
        }
    return DistanceMatrix(std::move(d));
}

}  // namespace qtda
