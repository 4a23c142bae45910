#include "qtda/mds.hpp"

#include <algorithm>
#include <cmath>

#include "qtda/rng.hpp"

namespace qtda {

namespace {

DistanceMatrix coordinate_distances(const Eigen::MatrixXd& coords) {
    const int n = static_cast<int>(coords.rows());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = (coords.row(i) - coords.row(j)).norm();
    return DistanceMatrix(std::move(d));
}

double euclidean_stress_objective(const Eigen::MatrixXd& coords, const DistanceMatrix& d,
                                  Eigen::MatrixXd* gradient) {
    const int n = static_cast<int>(coords.rows());
    if (gradient) gradient->setZero(coords.rows(), coords.cols());
    double objective = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const Eigen::VectorXd diff = (coords.row(j) - coords.row(k)).transpose();
            const double dist = diff.norm();
            const double e = d(j, k) - dist;
            objective += e * e;
            if (gradient && dist > 1e-300) {
                const Eigen::VectorXd g = (-2.0 * e / dist) * diff;
                gradient->row(j) += g.transpose();
                gradient->row(k) -= g.transpose();
            }
        }
    }
    return objective;
}

// Shared descent loop: steps through the learning-rate schedule, dropping to
// the next rate on plateau or on a rejected (objective-increasing) step.
template <typename Params, typename Evaluate, typename ApplyStep>
std::vector<std::pair<long, double>> run_descent(Params& params, const GradientSchedule& schedule,
                                                 const Evaluate& evaluate,
                                                 const ApplyStep& apply_step) {
    std::vector<std::pair<long, double>> trace;
    double objective = evaluate(params, nullptr);
    trace.emplace_back(0, objective);
    std::size_t rate_index = 0;
    double window_start = objective;
    int window_steps = 0;
    long last_iter = 0;
    for (long iter = 1; iter <= schedule.max_iterations; ++iter) {
        if (rate_index >= schedule.learning_rates.size()) break;
        Params candidate = params;
        double next = apply_step(candidate, schedule.learning_rates[rate_index]);
        if (next > objective) {
            ++rate_index;  // reject and move to the finer rate
            continue;
        }
        params = std::move(candidate);
        objective = next;
        last_iter = iter;
        if (iter % schedule.trace_stride == 0) trace.emplace_back(iter, objective);
        if (++window_steps >= schedule.plateau_window) {
            const double denom = std::max(std::abs(window_start), 1e-300);
            if ((window_start - objective) / denom < schedule.plateau_rel_tol) ++rate_index;
            window_start = objective;
            window_steps = 0;
        }
    }
    if (trace.back().first != last_iter) trace.emplace_back(last_iter, objective);
    return trace;
}

}  // namespace

EmbeddingResult classical_mds(const DistanceMatrix& d, int target_dim) {
    const int n = d.n();
    if (n < 2) throw std::invalid_argument("classical_mds: need n >= 2");
    const Eigen::MatrixXd gram = gram_from_distances(d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    if (es.info() != Eigen::Success) throw std::runtime_error("classical_mds: eigensolver failed");

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return es.eigenvalues()[a] > es.eigenvalues()[b]; });

    int rank = 0;
    while (rank < n && es.eigenvalues()[order[rank]] > 1e-10) ++rank;
    if (rank == 0)
        throw std::invalid_argument("classical_mds: Gram matrix has no positive eigenvalues");
    if (target_dim > 0) rank = std::min(rank, target_dim);

    Eigen::MatrixXd coords(n, rank);
    for (int c = 0; c < rank; ++c)
        coords.col(c) = std::sqrt(es.eigenvalues()[order[c]]) * es.eigenvectors().col(order[c]);

    EmbeddingResult result;
    result.coordinates = coords;
    const DistanceMatrix embedded = coordinate_distances(coords);
    result.final_stress = stress(d, embedded);
    result.final_distortion = distortion(d, embedded);
    result.objective_trace.emplace_back(0, result.final_stress);
    return result;
}

EmbeddingResult stress_mds(const DistanceMatrix& d, int dim, const GradientSchedule& schedule,
                           const std::optional<Eigen::MatrixXd>& init) {
    if (dim < 1) throw std::invalid_argument("stress_mds: dim must be >= 1");
    const int n = d.n();
    Eigen::MatrixXd coords;
    if (init) {
        if (init->rows() != n || init->cols() != dim)
            throw std::invalid_argument("stress_mds: init has wrong shape");
        coords = *init;
    } else {
        const EmbeddingResult cmds = classical_mds(d, dim);
        coords = Eigen::MatrixXd::Zero(n, dim);
        coords.leftCols(std::min<int>(dim, static_cast<int>(cmds.coordinates.cols()))) =
            cmds.coordinates.leftCols(
                std::min<int>(dim, static_cast<int>(cmds.coordinates.cols())));
    }

    auto evaluate = [&](const Eigen::MatrixXd& c, Eigen::MatrixXd* g) {
        return euclidean_stress_objective(c, d, g);
    };
    Eigen::MatrixXd gradient;
    auto apply_step = [&](Eigen::MatrixXd& c, double lr) {
        euclidean_stress_objective(c, d, &gradient);
        c -= lr * gradient;
        return euclidean_stress_objective(c, d, nullptr);
    };

    EmbeddingResult result;
    result.objective_trace = run_descent(coords, schedule, evaluate, apply_step);
    result.coordinates = coords.rowwise() - coords.colwise().mean();
    const DistanceMatrix embedded = coordinate_distances(result.coordinates);
    result.final_stress = stress(d, embedded);
    result.final_distortion = distortion(d, embedded);
    return result;
}

double qmds_objective(const std::vector<Eigen::VectorXcd>& params, const DistanceMatrix& d,
                      double weight, std::vector<Eigen::VectorXcd>* gradient) {
    const int n = static_cast<int>(params.size());
    if (n != d.n()) throw std::invalid_argument("qmds_objective: size mismatch");
    if (gradient) {
        gradient->assign(n, Eigen::VectorXcd());
        for (int j = 0; j < n; ++j) (*gradient)[j].setZero(params[j].size());
    }
    std::vector<double> norms2(n);
    for (int j = 0; j < n; ++j) norms2[j] = params[j].squaredNorm();

    double objective = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const std::complex<double> overlap = params[j].dot(params[k]);  // <a_j|a_k>
            const double s = std::norm(overlap) / (norms2[j] * norms2[k]);
            const double e = d(j, k) - weight * (1.0 - s);
            objective += e * e;
            if (gradient) {
                // d s / d conj(a_j) = (conj(g) a_k - s N_k a_j) / (N_j N_k)
                const double factor = 2.0 * e * weight;
                (*gradient)[j] += factor *
                                  (std::conj(overlap) * params[k] - s * norms2[k] * params[j]) /
                                  (norms2[j] * norms2[k]);
                (*gradient)[k] += factor *
                                  (overlap * params[j] - s * norms2[j] * params[k]) /
                                  (norms2[j] * norms2[k]);
            }
        }
    }
    return objective;
}

EmbeddingResult qmds(const DistanceMatrix& d, int hilbert_dim, double weight,
                     const GradientSchedule& schedule, std::uint64_t seed) {
    if (hilbert_dim < 2) throw std::invalid_argument("qmds: hilbert_dim must be >= 2");
    const int n = d.n();
    const double w = weight > 0.0 ? weight : diameter(d);

    Rng rng(seed);
    std::vector<Eigen::VectorXcd> params;
    params.reserve(n);
    for (int j = 0; j < n; ++j) params.push_back(haar_random_state(hilbert_dim, rng).amplitudes);

    auto evaluate = [&](const std::vector<Eigen::VectorXcd>& p,
                        std::vector<Eigen::VectorXcd>* g) { return qmds_objective(p, d, w, g); };
    std::vector<Eigen::VectorXcd> gradient;
    auto apply_step = [&](std::vector<Eigen::VectorXcd>& p, double lr) {
        qmds_objective(p, d, w, &gradient);
        for (int j = 0; j < n; ++j) {
            // Real-parameter step: d/d(re, im) corresponds to twice the
            // Wirtinger-conjugate derivative.
            p[j] -= lr * 2.0 * gradient[j];
            p[j] /= p[j].norm();
        }
        return qmds_objective(p, d, w, nullptr);
    };

    EmbeddingResult result;
    result.objective_trace = run_descent(params, schedule, evaluate, apply_step);
    result.weight = w;
    result.seed = seed;
    result.states.reserve(n);
    for (int j = 0; j < n; ++j) result.states.emplace_back(params[j] / params[j].norm());

    Eigen::MatrixXd surrogate = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const double s = fidelity_pure(result.states[j], result.states[k]);
            surrogate(j, k) = surrogate(k, j) = w * (1.0 - s);
        }
    const DistanceMatrix surrogate_matrix(std::move(surrogate));
    result.final_stress = stress(d, surrogate_matrix);
    result.final_distortion = distortion(d, surrogate_matrix);
    return result;
}

double exact_fs_stress(const std::vector<PureState>& states, const DistanceMatrix& d,
                       double weight) {
    const int n = d.n();
    if (static_cast<int>(states.size()) != n)
        throw std::invalid_argument("exact_fs_stress: size mismatch");
    Eigen::MatrixXd fs = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            fs(j, k) = fs(k, j) =
                state_distance(states[j], states[k], StateMetric::fubini_study());
    return (d.entries - weight * fs).norm();
}

}  // namespace qtda
