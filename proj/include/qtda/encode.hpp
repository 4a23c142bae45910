#pragma once

#include "qtda/types.hpp"

namespace qtda {

// Per-qubit rotation about the (0, 1, 0) axis:
// x_j -> cos(x_j/2)|0> + sin(x_j/2)|1>, tensored over components.
PureState angle_encode(const Eigen::VectorXd& x);

// Two components per qubit: c(x_{2j-1})|0> + e^{i x_{2j}} s(x_{2j-1})|1>
// with c(t) = cos((t+pi)/4), s(t) = sin((t+pi)/4); odd d pads a trailing 0.
PureState dense_angle_encode(const Eigen::VectorXd& x);

// Normalizes x and promotes it to a complex state vector.
PureState amplitude_encode(const Eigen::VectorXd& x);

PureState sqrt_encode(const SimplexPoint& p);

DensityMatrix diagonal_encode(const SimplexPoint& p);

// Diagonal-phase layer between two Hadamard layers, with phi_{j} = x_j and
// phi_{j,k} = (pi - x_j)(pi - x_k); computed as diagonal phases plus two
// normalized Walsh-Hadamard transforms, O(d 2^d).
PureState iqp_encode(const Eigen::VectorXd& x);

// The (m+1) x (m+1) rotation taking the plane x_{m+1} = 0 to the plane
// orthogonal to (1, ..., 1).
Eigen::MatrixXd simplex_rotation(int m);

struct UniformTransform {
    int m = 0;                  // input dimension
    Eigen::VectorXd centroid;   // in R^m
    double radius = 0.0;        // largest radial distance of the centered data
    Eigen::MatrixXd rotation;   // (m+1) x (m+1), orthogonal
    Eigen::VectorXd shift;      // (1/(m+1)) * ones

    // All pairwise distances are divided by this factor.
    double scale() const { return radius * std::sqrt(static_cast<double>(m) * (m + 1)); }
};

UniformTransform fit_uniform_transform(const PointCloud& cloud);

SimplexPoint apply_uniform_transform(const UniformTransform& t, const Eigen::VectorXd& x);

// Diagonal encoding after the uniform transformation; preserves Euclidean
// distances up to the transform's scale factor in the Hilbert-Schmidt metric.
std::vector<DensityMatrix> utd_encode(const PointCloud& cloud);

// Square-root encoding after the uniform transformation; shrink < 1 pulls the
// data away from the simplex faces by enlarging the rescaling denominator.
std::vector<PureState> uts_encode(const PointCloud& cloud, double shrink = 1.0);

}  // namespace qtda
