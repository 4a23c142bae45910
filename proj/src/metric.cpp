#include "qtda/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qtda {

namespace {

void require_same_size(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("distance matrices have different sizes");
}

// Golden-section search for a convex function on [lo, hi]. The objectives
// here are piecewise linear or smooth convex, so unimodality holds.
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double rel_tol = 1e-9, int max_iter = 200) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > rel_tol * std::max(1.0, std::abs(b)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

DistanceMatrix euclidean_distance_matrix(const PointCloud& cloud) {
    return lp_distance_matrix(cloud, 2.0);
}

DistanceMatrix lp_distance_matrix(const PointCloud& cloud, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_distance_matrix: p must be >= 1");
    const int n = cloud.n();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::VectorXd diff = (cloud.points.row(i) - cloud.points.row(j)).transpose();
            double v;
            if (p == kInf)
                v = diff.cwiseAbs().maxCoeff();
            else if (p == 2.0)
                v = diff.norm();
            else if (p == 1.0)
                v = diff.cwiseAbs().sum();
            else
                v = std::pow(diff.cwiseAbs().array().pow(p).sum(), 1.0 / p);
            d(i, j) = d(j, i) = v;
        }
    }
    return DistanceMatrix(std::move(d));
}

double diameter(const DistanceMatrix& d) { return d.entries.maxCoeff(); }

DistanceMatrix rescale(const DistanceMatrix& d, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("rescale: lambda must be positive");
    return DistanceMatrix(lambda * d.entries);
}

bool satisfies_triangle_inequality(const DistanceMatrix& d, double tol) {
    const int n = d.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (d(i, j) > d(i, k) + d(k, j) + tol) return false;
    return true;
}

double distortion(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    require_same_size(dx, dy);
    return (dx.entries - dy.entries).cwiseAbs().maxCoeff();
}

ScaleFreeResult scale_free_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    require_same_size(dx, dy);
    const double diam_x = diameter(dx);

    double min_pos_y = kInf;
    for (int i = 0; i < dy.n(); ++i)
        for (int j = i + 1; j < dy.n(); ++j)
            if (dy(i, j) > 0.0) min_pos_y = std::min(min_pos_y, dy(i, j));
    if (!std::isfinite(min_pos_y))
        return {diam_x, kInf};  // d_Y vanishes identically; the optimum sits at mu = 0

    auto objective = [&](double mu) {
        return (dx.entries - mu * dy.entries).cwiseAbs().maxCoeff();
    };
    const double hi = 2.0 * diam_x / min_pos_y;
    const double mu_opt = golden_section(objective, 0.0, std::max(hi, 1e-12));
    const double val = objective(mu_opt);
    if (val >= diam_x || mu_opt < 1e-300) return {diam_x, kInf};
    return {val, 1.0 / mu_opt};
}

double stress(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    require_same_size(dx, dy);
    return (dx.entries - dy.entries).norm();
}

Eigen::MatrixXd gram_from_distances(const DistanceMatrix& d) {
    const int n = d.n();
    const Eigen::MatrixXd c =
        Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    const Eigen::MatrixXd d2 = d.entries.array().square();
    return -0.5 * c * d2 * c;
}

double strain(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    require_same_size(dx, dy);
    return (gram_from_distances(dx) - gram_from_distances(dy)).norm();
}

double codistortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                    const std::vector<int>& f, const std::vector<int>& g) {
    const int nx = dx.n(), ny = dy.n();
    if (static_cast<int>(f.size()) != nx || static_cast<int>(g.size()) != ny)
        throw std::invalid_argument("codistortion: maps must be total on their domains");
    for (int v : f)
        if (v < 0 || v >= ny) throw std::invalid_argument("codistortion: f out of range");
    for (int v : g)
        if (v < 0 || v >= nx) throw std::invalid_argument("codistortion: g out of range");
    double worst = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            worst = std::max(worst, std::abs(dx(i, g[j]) - dy(f[i], j)));
    return worst;
}

double gh_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy,
                      const Correspondence& r) {
    r.validate(dx.n(), dy.n());
    double dis = 0.0;
    for (size_t a = 0; a < r.pairs.size(); ++a)
        for (size_t b = a; b < r.pairs.size(); ++b) {
            auto [i, j] = r.pairs[a];
            auto [k, l] = r.pairs[b];
            dis = std::max(dis, std::abs(dx(i, k) - dy(j, l)));
        }
    return 0.5 * dis;
}

double gh_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    require_same_size(dx, dy);
    return 0.5 * distortion(dx, dy);
}

WeightResult optimal_weight(const DistanceMatrix& dx, const DistanceMatrix& dy,
                            WeightObjective objective) {
    require_same_size(dx, dy);
    double min_pos_y = kInf;
    for (int i = 0; i < dy.n(); ++i)
        for (int j = i + 1; j < dy.n(); ++j)
            if (dy(i, j) > 0.0) min_pos_y = std::min(min_pos_y, dy(i, j));
    if (!std::isfinite(min_pos_y))
        throw std::invalid_argument("optimal_weight: d_Y is identically zero");

    auto residual = [&](double w) {
        const Eigen::MatrixXd diff = dx.entries - w * dy.entries;
        return objective == WeightObjective::Max ? diff.cwiseAbs().maxCoeff() : diff.norm();
    };
    const double hi = std::max(2.0 * diameter(dx) / min_pos_y, 1e-12);
    const double w = golden_section(residual, 0.0, hi);
    return {w, residual(w)};
}

}  // namespace qtda
