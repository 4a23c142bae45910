#pragma once

#include <cstdint>
#include <optional>

#include "qtda/metric.hpp"
#include "qtda/quantum.hpp"

namespace qtda {

struct GradientSchedule {
    std::vector<double> learning_rates{1e-3, 1e-4};
    long max_iterations = 200000;
    // Learning-rate drop when the relative objective decrease over this many
    // steps falls below the tolerance.
    int plateau_window = 100;
    double plateau_rel_tol = 1e-9;
    int trace_stride = 100;
};

struct EmbeddingResult {
    Eigen::MatrixXd coordinates;                        // n x r, Euclidean case
    std::vector<PureState> states;                      // quantum case
    std::vector<std::pair<long, double>> objective_trace;
    double final_stress = 0.0;
    double final_distortion = 0.0;
    double weight = 1.0;
    std::uint64_t seed = 0;
};

// Strain-minimizing embedding: double-centered Gram matrix, Hermitian
// eigendecomposition, positive eigenvalues kept in decreasing order
// (truncated to target_dim when given), coordinates sqrt(Lambda) Q^T.
EmbeddingResult classical_mds(const DistanceMatrix& d, int target_dim = -1);

// Gradient descent on sum_{j<k} (D_jk - |y_j - y_k|)^2 with analytic
// gradient; default initialization is the classical MDS output.
EmbeddingResult stress_mds(const DistanceMatrix& d, int dim,
                           const GradientSchedule& schedule = {},
                           const std::optional<Eigen::MatrixXd>& init = std::nullopt);

// Quantum MDS onto pure states of C^hilbert_dim: minimizes
// sum_{j<k} (D_jk - w (1 - |<x_j|x_k>|^2))^2 over unnormalized complex
// parameters that are re-normalized after every step; w defaults to diam(D).
EmbeddingResult qmds(const DistanceMatrix& d, int hilbert_dim, double weight = -1.0,
                     const GradientSchedule& schedule = {}, std::uint64_t seed = 0);

// Frobenius norm of D - weight * D_FS(states).
double exact_fs_stress(const std::vector<PureState>& states, const DistanceMatrix& d,
                       double weight);

// Objective and Wirtinger-conjugate gradient of the quadratic Fubini-Study
// surrogate at unit-norm parameter vectors. Exposed for the finite-difference
// checks.
double qmds_objective(const std::vector<Eigen::VectorXcd>& params, const DistanceMatrix& d,
                      double weight, std::vector<Eigen::VectorXcd>* gradient = nullptr);

}  // namespace qtda
