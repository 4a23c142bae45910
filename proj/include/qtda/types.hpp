#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtda {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite point cloud in R^m, one row per point.
struct PointCloud {
    Eigen::MatrixXd points;

    PointCloud() = default;
    explicit PointCloud(Eigen::MatrixXd pts) : points(std::move(pts)) {
        if (points.rows() < 1 || points.cols() < 1)
            throw std::invalid_argument("PointCloud: need n >= 1 points in dimension m >= 1");
        if (!points.allFinite())
            throw std::invalid_argument("PointCloud: coordinates must be finite");
    }

    int n() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
    Eigen::VectorXd point(int i) const { return points.row(i).transpose(); }
};

// Symmetric nonnegative matrix with zero diagonal. Triangle inequality is
// checked separately (opt-in, O(n^3)).
struct DistanceMatrix {
    Eigen::MatrixXd entries;

    DistanceMatrix() = default;
    explicit DistanceMatrix(Eigen::MatrixXd d) : entries(std::move(d)) {
        const auto n = entries.rows();
        if (n < 1 || entries.cols() != n)
            throw std::invalid_argument("DistanceMatrix: matrix must be square, n >= 1");
        for (Eigen::Index i = 0; i < n; ++i) {
            if (entries(i, i) != 0.0)
                throw std::invalid_argument("DistanceMatrix: diagonal must be zero");
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double a = entries(i, j), b = entries(j, i);
                if (!(a >= 0.0) || !(b >= 0.0))
                    throw std::invalid_argument("DistanceMatrix: entries must be nonnegative");
                if (a != b)
                    throw std::invalid_argument("DistanceMatrix: matrix must be symmetric");
            }
        }
    }

    int n() const { return static_cast<int>(entries.rows()); }
    double operator()(int i, int j) const { return entries(i, j); }
};

// A correspondence between index sets {0..n_x-1} and {0..n_y-1}: every index
// on either side appears in at least one pair.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;

    void validate(int n_x, int n_y) const {
        std::vector<char> sx(n_x, 0), sy(n_y, 0);
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= n_x || j < 0 || j >= n_y)
                throw std::invalid_argument("Correspondence: index out of range");
            sx[i] = 1;
            sy[j] = 1;
        }
        for (int i = 0; i < n_x; ++i)
            if (!sx[i]) throw std::invalid_argument("Correspondence: uncovered index in X");
        for (int j = 0; j < n_y; ++j)
            if (!sy[j]) throw std::invalid_argument("Correspondence: uncovered index in Y");
    }
};

// Unit vector in C^dim.
struct PureState {
    Eigen::VectorXcd amplitudes;

    PureState() = default;
    explicit PureState(Eigen::VectorXcd amp) : amplitudes(std::move(amp)) {
        if (amplitudes.size() < 1)
            throw std::invalid_argument("PureState: dimension must be >= 1");
        if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
            throw std::invalid_argument("PureState: vector is not normalized");
    }

    int dim() const { return static_cast<int>(amplitudes.size()); }
};

// Hermitian, PSD, trace-one matrix.
struct DensityMatrix {
    Eigen::MatrixXcd entries;

    DensityMatrix() = default;
    explicit DensityMatrix(Eigen::MatrixXcd rho) : entries(std::move(rho)) {
        const auto d = entries.rows();
        if (d < 1 || entries.cols() != d)
            throw std::invalid_argument("DensityMatrix: matrix must be square");
        if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        if (std::abs(entries.trace().real() - 1.0) > 1e-10 ||
            std::abs(entries.trace().imag()) > 1e-10)
            throw std::invalid_argument("DensityMatrix: trace must be 1");
    }

    int dim() const { return static_cast<int>(entries.rows()); }
};

struct FidelityEstimate {
    double value = 0.0;  // in [0, 1]
    long shots = 0;      // 0 means exact
};

// Point on the probability simplex; entries in (-1e-12, 0) are clamped to 0
// since uniform-transform images can touch the simplex faces.
struct SimplexPoint {
    Eigen::VectorXd coords;

    SimplexPoint() = default;
    explicit SimplexPoint(Eigen::VectorXd c) : coords(std::move(c)) {
        if (coords.size() < 1)
            throw std::invalid_argument("SimplexPoint: need dimension >= 1");
        for (Eigen::Index i = 0; i < coords.size(); ++i) {
            if (coords[i] < -1e-12)
                throw std::invalid_argument("SimplexPoint: negative coordinate");
            if (coords[i] < 0.0) coords[i] = 0.0;
        }
        if (std::abs(coords.sum() - 1.0) > 1e-9)
            throw std::invalid_argument("SimplexPoint: coordinates must sum to 1");
    }

    int dim() const { return static_cast<int>(coords.size()); }
};

}  // namespace qtda
