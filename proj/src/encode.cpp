#include "qtda/encode.hpp"

#include <cmath>
#include <complex>

#include "qtda/metric.hpp"

namespace qtda {

namespace {

using cd = std::complex<double>;

// Tensor product of single-qubit states; qubit 0 is the most significant bit
// of the basis index.
Eigen::VectorXcd tensor_qubits(const std::vector<std::array<cd, 2>>& qubits) {
    const int d = static_cast<int>(qubits.size());
    const std::size_t dim = std::size_t{1} << d;
    Eigen::VectorXcd amp(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        cd a(1.0, 0.0);
        for (int j = 0; j < d; ++j) a *= qubits[j][(b >> (d - 1 - j)) & 1u];
        amp[static_cast<Eigen::Index>(b)] = a;
    }
    return amp;
}

// In-place normalized Walsh-Hadamard transform (H^{otimes d}).
void walsh_hadamard(Eigen::VectorXcd& v) {
    const std::size_t n = static_cast<std::size_t>(v.size());
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const cd a = v[static_cast<Eigen::Index>(j)];
                const cd b = v[static_cast<Eigen::Index>(j + len)];
                v[static_cast<Eigen::Index>(j)] = a + b;
                v[static_cast<Eigen::Index>(j + len)] = a - b;
            }
        }
    }
    v /= std::sqrt(static_cast<double>(n));
}

}  // namespace

PureState angle_encode(const Eigen::VectorXd& x) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("angle_encode: need d >= 1");
    std::vector<std::array<cd, 2>> qubits(d);
    for (int j = 0; j < d; ++j)
        qubits[j] = {cd(std::cos(0.5 * x[j]), 0.0), cd(std::sin(0.5 * x[j]), 0.0)};
    return PureState(tensor_qubits(qubits));
}

PureState dense_angle_encode(const Eigen::VectorXd& x) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("dense_angle_encode: need d >= 1");
    const int qubit_count = (d + 1) / 2;
    std::vector<std::array<cd, 2>> qubits(qubit_count);
    for (int j = 0; j < qubit_count; ++j) {
        const double theta = x[2 * j];
        const double phase = (2 * j + 1 < d) ? x[2 * j + 1] : 0.0;
        qubits[j] = {cd(std::cos(0.25 * (theta + M_PI)), 0.0),
                     std::polar(std::sin(0.25 * (theta + M_PI)), phase)};
    }
    return PureState(tensor_qubits(qubits));
}

PureState amplitude_encode(const Eigen::VectorXd& x) {
    const double norm = x.norm();
    if (norm <= 1e-12) throw std::invalid_argument("amplitude_encode: zero vector");
    return PureState((x / norm).cast<cd>());
}

PureState sqrt_encode(const SimplexPoint& p) {
    return PureState(p.coords.cwiseSqrt().cast<cd>());
}

DensityMatrix diagonal_encode(const SimplexPoint& p) {
    return DensityMatrix(p.coords.cast<cd>().asDiagonal().toDenseMatrix());
}

PureState iqp_encode(const Eigen::VectorXd& x) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("iqp_encode: need d >= 1");
    const std::size_t dim = std::size_t{1} << d;

    // H^{otimes d}|0...0> is the uniform superposition.
    Eigen::VectorXcd amp =
        Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(dim),
                                   cd(std::pow(2.0, -0.5 * d), 0.0));
    for (std::size_t b = 0; b < dim; ++b) {
        double phase = 0.0;
        for (int j = 0; j < d; ++j) {
            const double zj = ((b >> (d - 1 - j)) & 1u) ? -1.0 : 1.0;
            phase += x[j] * zj;
            for (int k = j + 1; k < d; ++k) {
                const double zk = ((b >> (d - 1 - k)) & 1u) ? -1.0 : 1.0;
                phase += (M_PI - x[j]) * (M_PI - x[k]) * zj * zk;
            }
        }
        amp[static_cast<Eigen::Index>(b)] *= std::polar(1.0, phase);
    }
    walsh_hadamard(amp);
    return PureState(amp / amp.norm());
}

Eigen::MatrixXd simplex_rotation(int m) {
    if (m < 1) throw std::invalid_argument("simplex_rotation: need m >= 1");
    const double root = std::sqrt(static_cast<double>(m + 1));
    Eigen::MatrixXd r(m + 1, m + 1);
    const double diag = (1.0 + (m - 1) * root) / (m * root);
    const double off = (1.0 - root) / (m * root);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r(i, j) = (i == j) ? diag : off;
    for (int j = 0; j < m; ++j) r(m, j) = -1.0 / root;
    for (int i = 0; i <= m; ++i) r(i, m) = 1.0 / root;
    return r;
}

UniformTransform fit_uniform_transform(const PointCloud& cloud) {
    if (cloud.n() < 2) throw std::invalid_argument("fit_uniform_transform: need n >= 2");
    const int m = cloud.dim();
    UniformTransform t;
    t.m = m;
    t.centroid = cloud.points.colwise().mean().transpose();
    // Largest radial distance of the centered dataset; for centrally
    // symmetric data this equals diam/2.
    double radius = 0.0;
    for (int i = 0; i < cloud.n(); ++i)
        radius = std::max(radius, (cloud.point(i) - t.centroid).norm());
    if (radius <= 0.0)
        throw std::invalid_argument("fit_uniform_transform: all points identical");
    t.radius = radius;
    t.rotation = simplex_rotation(m);
    t.shift = Eigen::VectorXd::Constant(m + 1, 1.0 / (m + 1));
    return t;
}

SimplexPoint apply_uniform_transform(const UniformTransform& t, const Eigen::VectorXd& x) {
    if (static_cast<int>(x.size()) != t.m)
        throw std::invalid_argument("apply_uniform_transform: dimension mismatch");
    Eigen::VectorXd lifted = Eigen::VectorXd::Zero(t.m + 1);
    lifted.head(t.m) = (x - t.centroid) / t.scale();
    return SimplexPoint(t.rotation * lifted + t.shift);
}

std::vector<DensityMatrix> utd_encode(const PointCloud& cloud) {
    const UniformTransform t = fit_uniform_transform(cloud);
    std::vector<DensityMatrix> out;
    out.reserve(cloud.n());
    for (int i = 0; i < cloud.n(); ++i)
        out.push_back(diagonal_encode(apply_uniform_transform(t, cloud.point(i))));
    return out;
}

std::vector<PureState> uts_encode(const PointCloud& cloud, double shrink) {
    if (!(shrink > 0.0 && shrink <= 1.0))
        throw std::invalid_argument("uts_encode: shrink must be in (0, 1]");
    UniformTransform t = fit_uniform_transform(cloud);
    t.radius /= shrink;
    std::vector<PureState> out;
    out.reserve(cloud.n());
    for (int i = 0; i < cloud.n(); ++i)
        out.push_back(sqrt_encode(apply_uniform_transform(t, cloud.point(i))));
    return out;
}

}  // namespace qtda
