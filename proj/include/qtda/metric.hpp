#pragma once

#include "qtda/types.hpp"

namespace qtda {

DistanceMatrix euclidean_distance_matrix(const PointCloud& cloud);

// Minkowski-p distances; p = kInf gives the max metric. Rejects p < 1.
DistanceMatrix lp_distance_matrix(const PointCloud& cloud, double p);

double diameter(const DistanceMatrix& d);

DistanceMatrix rescale(const DistanceMatrix& d, double lambda);

// Opt-in O(n^3) validation of d_ij <= d_ik + d_kj.
bool satisfies_triangle_inequality(const DistanceMatrix& d, double tol = 1e-9);

// Max-entry (l-infinity) deviation between two metrics on the same index set.
double distortion(const DistanceMatrix& dx, const DistanceMatrix& dy);

struct ScaleFreeResult {
    double value = 0.0;
    double lambda = kInf;  // optimal rescaling of d_Y; kInf when the optimum collapses at mu = 0
};

// min over mu >= 0 of max |D_X - mu D_Y| with mu = 1/lambda; the objective is
// convex piecewise linear, minimized by golden-section search.
ScaleFreeResult scale_free_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy);

// Frobenius norm of D_X - D_Y.
double stress(const DistanceMatrix& dx, const DistanceMatrix& dy);

// G = -1/2 C D^(2) C with C the centering matrix; symmetric, rows sum to 0.
Eigen::MatrixXd gram_from_distances(const DistanceMatrix& d);

double strain(const DistanceMatrix& dx, const DistanceMatrix& dy);

// max over (i, j) of |D_X[i][g(j)] - D_Y[f(i)][j]| for index maps f: X->Y, g: Y->X.
double codistortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                    const std::vector<int>& f, const std::vector<int>& g);

// Half the distortion of a correspondence; an upper bound on the
// Gromov-Hausdorff distance.
double gh_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy,
                      const Correspondence& r);

// Convenience overload: identity correspondence on equal-sized spaces.
double gh_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy);

enum class WeightObjective { Max, Frobenius };

struct WeightResult {
    double w = 0.0;
    double residual = 0.0;
};

// argmin_{w >= 0} ||D_X - w D_Y|| under the chosen norm (golden section).
WeightResult optimal_weight(const DistanceMatrix& dx, const DistanceMatrix& dy,
                            WeightObjective objective = WeightObjective::Max);

}  // namespace qtda
