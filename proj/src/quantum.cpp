#include "qtda/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "qtda/rng.hpp"

namespace qtda {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double clamped_acos(double x) { return std::acos(std::min(1.0, std::max(-1.0, x))); }

void require_same_dim(int a, int b) {
    if (a != b) throw std::invalid_argument("states have different dimensions");
}

// Hermitian square root with clamping of small negative eigenvalues.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < 0.0 && ev[i] > -1e-10) ev[i] = 0.0;
        if (ev[i] < 0.0) throw std::invalid_argument("matrix is not PSD within tolerance");
    }
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

// Quantum Bhattacharyya coefficient Tr[sqrt(rho) sqrt(sigma)].
double affinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const Eigen::MatrixXcd product = psd_sqrt(rho.entries) * psd_sqrt(sigma.entries);
    return clamp01(product.trace().real());
}

// Schatten-p norm of a Hermitian matrix from its eigenvalues.
double schatten_norm(const Eigen::MatrixXcd& herm, double p) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd sv = es.eigenvalues().cwiseAbs();
    if (p == kInf) return sv.maxCoeff();
    if (p == 1.0) return sv.sum();
    if (p == 2.0) return sv.norm();
    return std::pow(sv.array().pow(p).sum(), 1.0 / p);
}

double distance_from_fidelity(MetricKind kind, double schatten_p, double fid) {
    const double f = clamp01(fid);
    switch (kind) {
        case MetricKind::Trace:
            return 2.0 * std::sqrt(1.0 - f);
        case MetricKind::HilbertSchmidt:
            return std::sqrt(2.0 * (1.0 - f));
        case MetricKind::Schatten:
            // rho - sigma for pure states has eigenvalues +-sqrt(1-F)
            return std::pow(2.0, 1.0 / schatten_p) * std::sqrt(1.0 - f);
        case MetricKind::BuresFidelity:
            return std::sqrt(1.0 - std::sqrt(f));
        case MetricKind::BuresAngle:
        case MetricKind::FubiniStudy:
            return (2.0 / M_PI) * clamped_acos(std::sqrt(f));
        case MetricKind::Hellinger:
            // B = F for rank-one projectors
            return std::sqrt(1.0 - f);
        case MetricKind::WignerYanase:
            return (2.0 / M_PI) * clamped_acos(f);
    }
    throw std::logic_error("unknown metric kind");
}

}  // namespace

double fidelity_pure(const PureState& psi, const PureState& phi) {
    require_same_dim(psi.dim(), phi.dim());
    return clamp01(std::norm(psi.amplitudes.dot(phi.amplitudes)));
}

double fidelity_diagonal(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    require_same_dim(static_cast<int>(p.size()), static_cast<int>(q.size()));
    if (p.minCoeff() < -1e-12 || q.minCoeff() < -1e-12 ||
        std::abs(p.sum() - 1.0) > 1e-9 || std::abs(q.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("fidelity_diagonal: inputs must lie on the simplex");
    const double b = (p.cwiseMax(0.0).cwiseProduct(q.cwiseMax(0.0))).cwiseSqrt().sum();
    return clamp01(b * b);
}

double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho.dim(), sigma.dim());
    const Eigen::MatrixXcd sq = psd_sqrt(rho.entries);
    const Eigen::MatrixXcd inner = sq * sigma.entries * sq;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner, Eigen::EigenvaluesOnly);
    double tr = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()[i];
        if (ev < 0.0 && ev > -1e-10) ev = 0.0;
        if (ev < 0.0) throw std::invalid_argument("fidelity_mixed: non-PSD inner matrix");
        tr += std::sqrt(ev);
    }
    return clamp01(tr * tr);
}

double state_distance(const PureState& a, const PureState& b, const StateMetric& metric) {
    require_same_dim(a.dim(), b.dim());
    return pure_distance_from_fidelity(metric, fidelity_pure(a, b));
}

double pure_distance_from_fidelity(const StateMetric& metric, double fidelity) {
    if (metric.kind == MetricKind::Schatten && !(metric.p >= 1.0))
        throw std::invalid_argument("state_distance: Schatten order must be >= 1");
    return distance_from_fidelity(metric.kind, metric.p, fidelity);
}

double state_distance(const DensityMatrix& a, const DensityMatrix& b, const StateMetric& metric) {
    require_same_dim(a.dim(), b.dim());
    switch (metric.kind) {
        case MetricKind::Trace:
            return schatten_norm(a.entries - b.entries, 1.0);
        case MetricKind::HilbertSchmidt:
            return schatten_norm(a.entries - b.entries, 2.0);
        case MetricKind::Schatten:
            if (!(metric.p >= 1.0))
                throw std::invalid_argument("state_distance: Schatten order must be >= 1");
            return schatten_norm(a.entries - b.entries, metric.p);
        case MetricKind::BuresFidelity:
            return std::sqrt(std::max(0.0, 1.0 - std::sqrt(fidelity_mixed(a, b))));
        case MetricKind::BuresAngle:
            return (2.0 / M_PI) * clamped_acos(std::sqrt(fidelity_mixed(a, b)));
        case MetricKind::Hellinger:
            return std::sqrt(std::max(0.0, 1.0 - affinity(a, b)));
        case MetricKind::WignerYanase:
            return (2.0 / M_PI) * clamped_acos(affinity(a, b));
        case MetricKind::FubiniStudy:
            throw std::invalid_argument("Fubini-Study distance requires pure states");
    }
    throw std::logic_error("unknown metric kind");
}

StateMetric parse_state_metric(const std::string& name, double schatten_p) {
    if (name == "trace") return StateMetric::trace();
    if (name == "hilbert_schmidt" || name == "hs") return StateMetric::hilbert_schmidt();
    if (name == "schatten") return StateMetric::schatten(schatten_p);
    if (name == "bures_fidelity") return StateMetric::bures_fidelity();
    if (name == "bures_angle") return StateMetric::bures_angle();
    if (name == "hellinger") return StateMetric::hellinger();
    if (name == "wigner_yanase") return StateMetric::wigner_yanase();
    if (name == "fubini_study") return StateMetric::fubini_study();
    throw std::invalid_argument("unknown quantum metric: " + name);
}

std::string state_metric_name(const StateMetric& metric) {
    switch (metric.kind) {
        case MetricKind::Trace: return "trace";
        case MetricKind::HilbertSchmidt: return "hilbert_schmidt";
        case MetricKind::Schatten: return "schatten";
        case MetricKind::BuresFidelity: return "bures_fidelity";
        case MetricKind::BuresAngle: return "bures_angle";
        case MetricKind::Hellinger: return "hellinger";
        case MetricKind::WignerYanase: return "wigner_yanase";
        case MetricKind::FubiniStudy: return "fubini_study";
    }
    return "?";
}

DensityMatrix density_from_pure(const PureState& psi) {
    return DensityMatrix(psi.amplitudes * psi.amplitudes.adjoint());
}

FidelityEstimate swap_test_estimate(const PureState& psi, const PureState& phi, long shots,
                                    std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("swap_test_estimate: shots must be >= 1");
    const double f = fidelity_pure(psi, phi);
    const double p_success = 0.5 * (1.0 + f);
    Rng rng(seed);
    long successes = 0;
    for (long s = 0; s < shots; ++s)
        if (rng.uniform() < p_success) ++successes;
    const double estimate = 2.0 * (static_cast<double>(successes) / shots) - 1.0;
    return {std::min(1.0, std::max(0.0, estimate)), shots};
}

}  // namespace qtda
