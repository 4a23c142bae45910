#pragma once

#include <cstdint>

#include "qtda/types.hpp"

namespace qtda {

// |<psi|phi>|^2, clamped to [0, 1].
double fidelity_pure(const PureState& psi, const PureState& phi);

// Squared Bhattacharyya coefficient of two probability vectors.
double fidelity_diagonal(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via Hermitian
// eigendecompositions; eigenvalues in (-1e-10, 0) are clamped to 0.
double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& sigma);

enum class MetricKind {
    Trace,
    HilbertSchmidt,
    Schatten,
    BuresFidelity,
    BuresAngle,
    Hellinger,
    WignerYanase,
    FubiniStudy,
};

struct StateMetric {
    MetricKind kind = MetricKind::BuresFidelity;
    double p = 2.0;  // Schatten order, only used when kind == Schatten

    static StateMetric trace() { return {MetricKind::Trace}; }
    static StateMetric hilbert_schmidt() { return {MetricKind::HilbertSchmidt}; }
    static StateMetric schatten(double p) { return {MetricKind::Schatten, p}; }
    static StateMetric bures_fidelity() { return {MetricKind::BuresFidelity}; }
    static StateMetric bures_angle() { return {MetricKind::BuresAngle}; }
    static StateMetric hellinger() { return {MetricKind::Hellinger}; }
    static StateMetric wigner_yanase() { return {MetricKind::WignerYanase}; }
    static StateMetric fubini_study() { return {MetricKind::FubiniStudy}; }
};

// All distances use the paper's conventions: BuresFidelity, BuresAngle,
// Hellinger, WignerYanase and FubiniStudy have maximum value 1.
double state_distance(const PureState& a, const PureState& b, const StateMetric& metric);
double state_distance(const DensityMatrix& a, const DensityMatrix& b, const StateMetric& metric);

// Distance between two pure states as a function of their fidelity alone
// (|psi><psi| - |phi><phi| has eigenvalues +-sqrt(1-F), so every supported
// metric reduces to this).
double pure_distance_from_fidelity(const StateMetric& metric, double fidelity);

StateMetric parse_state_metric(const std::string& name, double schatten_p = 2.0);
std::string state_metric_name(const StateMetric& metric);

DensityMatrix density_from_pure(const PureState& psi);

// SWAP-test fidelity estimator: `shots` Bernoulli draws with success
// probability (1+F)/2; returns 2 * successes/shots - 1 clamped to [0, 1].
FidelityEstimate swap_test_estimate(const PureState& psi, const PureState& phi, long shots,
                                    std::uint64_t seed);

}  // namespace qtda
