#pragma once

#include <cstdint>

#include "qtda/types.hpp"

namespace qtda {

// n-th roots of unity at radius r as a planar point cloud.
PointCloud roots_of_unity(int n, double r);

// Angles uniform on [0, 2pi), radii r + Gaussian(0, sigma); deterministic per seed.
PointCloud noisy_circle(int n, double r, double sigma, std::uint64_t seed);

// Geodesic (arc-length) distances between the n-th roots of unity at radius r.
DistanceMatrix geodesic_circle_matrix(int n, double r);

}  // namespace qtda
