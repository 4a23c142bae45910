#include "qtda/pipeline.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

namespace qtda {

using nlohmann::json;

namespace {

double default_pre_scale(const std::string& name) {
    if (name == "angle") return M_PI;
    if (name == "iqp") return 0.5 * M_PI;
    return 1.0;
}

StateMetric metric_for(const ExperimentConfig& cfg) {
    if (!cfg.quantum_metric.empty())
        return parse_state_metric(cfg.quantum_metric, cfg.schatten_p);
    // The UTD exactness statement lives in the Hilbert-Schmidt metric; the
    // remaining encodings are compared in the Bures angle by default.
    if (cfg.encoding.name == "utd" || cfg.encoding.name == "diagonal")
        return StateMetric::hilbert_schmidt();
    return StateMetric::bures_angle();
}

std::uint64_t pair_seed(std::uint64_t base, int i, int j) {
    // splitmix-style mix of the base seed and the pair index
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) * 1000003ULL +
                                                      static_cast<std::uint64_t>(j) + 1ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

DistanceMatrix pure_state_distances(const std::vector<PureState>& states,
                                    const StateMetric& metric, long shots, std::uint64_t seed) {
    const int n = static_cast<int>(states.size());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double value;
            if (shots > 0) {
                const double f =
                    swap_test_estimate(states[i], states[j], shots, pair_seed(seed, i, j)).value;
                value = pure_distance_from_fidelity(metric, f);
            } else {
                value = state_distance(states[i], states[j], metric);
            }
            d(i, j) = d(j, i) = value;
        }
    return DistanceMatrix(std::move(d));
}

DistanceMatrix density_matrix_distances(const std::vector<DensityMatrix>& states,
                                        const StateMetric& metric) {
    const int n = static_cast<int>(states.size());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = state_distance(states[i], states[j], metric);
    return DistanceMatrix(std::move(d));
}

std::filesystem::path prepare_output_dir(const std::string& dir) {
    std::filesystem::path path(dir.empty() ? default_output_dir() : dir);
    std::filesystem::create_directories(path);
    return path;
}

}  // namespace

std::string default_output_dir() {
    const char* env = std::getenv("QTDA_OUTPUT_DIR");
    return env && *env ? env : ".";
}

ExperimentConfig config_from_json(const std::string& text) {
    const json j = json::parse(text);
    ExperimentConfig cfg;
    if (j.contains("dataset")) {
        const json& d = j.at("dataset");
        cfg.dataset.kind = d.value("kind", cfg.dataset.kind);
        cfg.dataset.n = d.value("n", cfg.dataset.n);
        cfg.dataset.r = d.value("r", cfg.dataset.r);
        cfg.dataset.sigma = d.value("sigma", cfg.dataset.sigma);
        cfg.dataset.seed = d.value("seed", cfg.dataset.seed);
        cfg.dataset.path = d.value("path", cfg.dataset.path);
    }
    cfg.base_metric = j.value("base_metric", cfg.base_metric);
    if (j.contains("encoding")) {
        const json& e = j.at("encoding");
        cfg.encoding.name = e.value("name", cfg.encoding.name);
        cfg.encoding.pre_scale = e.value("pre_scale", cfg.encoding.pre_scale);
        cfg.encoding.shrink = e.value("shrink", cfg.encoding.shrink);
        cfg.encoding.uniform_transform =
            e.value("uniform_transform", cfg.encoding.uniform_transform);
    }
    cfg.quantum_metric = j.value("quantum_metric", cfg.quantum_metric);
    cfg.schatten_p = j.value("schatten_p", cfg.schatten_p);
    cfg.max_hom_degree = j.value("max_hom_degree", cfg.max_hom_degree);
    cfg.shots = j.value("shots", cfg.shots);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    if (cfg.max_hom_degree < 0 || cfg.max_hom_degree > 4)
        throw std::invalid_argument("config: max_hom_degree must lie in [0, 4]");
    return cfg;
}

PointCloud load_dataset(const DatasetSpec& spec) {
    if (spec.kind == "roots_of_unity") return roots_of_unity(spec.n, spec.r);
    if (spec.kind == "noisy_circle") return noisy_circle(spec.n, spec.r, spec.sigma, spec.seed);
    if (spec.kind == "file") return point_cloud_from_csv(read_file(spec.path));
    throw std::invalid_argument("unknown dataset kind: " + spec.kind);
}

DistanceMatrix base_distance_matrix(const PointCloud& cloud, const std::string& base_metric,
                                    const DatasetSpec& spec) {
    if (base_metric == "euclidean") return euclidean_distance_matrix(cloud);
    if (base_metric == "geodesic_circle") {
        if (spec.kind != "roots_of_unity")
            throw std::invalid_argument(
                "geodesic_circle base metric requires the roots_of_unity dataset");
        return geodesic_circle_matrix(spec.n, spec.r);
    }
    throw std::invalid_argument("unknown base metric: " + base_metric);
}

DistanceMatrix encoded_distance_matrix(const PointCloud& cloud, const EncodingSpec& encoding,
                                       const StateMetric& metric, long shots,
                                       std::uint64_t seed) {
    const std::string& name = encoding.name;
    const double pre_scale =
        encoding.pre_scale > 0.0 ? encoding.pre_scale : default_pre_scale(name);

    if (name == "utd") {
        return density_matrix_distances(utd_encode(cloud), metric);
    }
    if (name == "uts") {
        return pure_state_distances(uts_encode(cloud, encoding.shrink), metric, shots, seed);
    }

    // Remaining encodings run pointwise on coordinate vectors, optionally
    // after mapping the cloud onto the simplex.
    std::vector<Eigen::VectorXd> inputs;
    inputs.reserve(cloud.n());
    if (encoding.uniform_transform) {
        const UniformTransform t = fit_uniform_transform(cloud);
        for (int i = 0; i < cloud.n(); ++i)
            inputs.push_back(apply_uniform_transform(t, cloud.point(i)).coords);
    } else {
        for (int i = 0; i < cloud.n(); ++i) inputs.push_back(cloud.point(i));
    }
    for (auto& x : inputs) x *= pre_scale;

    if (name == "sqrt" || name == "diagonal") {
        if (pre_scale != 1.0)
            throw std::invalid_argument(name + " encoding does not admit a pre-scale");
        if (name == "diagonal") {
            std::vector<DensityMatrix> states;
            states.reserve(inputs.size());
            for (const auto& x : inputs) states.push_back(diagonal_encode(SimplexPoint(x)));
            return density_matrix_distances(states, metric);
        }
        std::vector<PureState> states;
        states.reserve(inputs.size());
        for (const auto& x : inputs) states.push_back(sqrt_encode(SimplexPoint(x)));
        return pure_state_distances(states, metric, shots, seed);
    }

    std::vector<PureState> states;
    states.reserve(inputs.size());
    for (const auto& x : inputs) {
        if (name == "angle")
            states.push_back(angle_encode(x));
        else if (name == "dense-angle")
            states.push_back(dense_angle_encode(x));
        else if (name == "amplitude")
            states.push_back(amplitude_encode(x));
        else if (name == "iqp")
            states.push_back(iqp_encode(x));
        else
            throw std::invalid_argument("unknown encoding: " + name);
    }
    return pure_state_distances(states, metric, shots, seed);
}

ComparisonReport compare_metrics(const DistanceMatrix& original, const DistanceMatrix& encoded,
                                 int max_hom_degree) {
    ComparisonReport report;
    const WeightResult weight = optimal_weight(original, encoded, WeightObjective::Max);
    report.weight = weight.w;
    report.weight_residual = weight.residual;
    const DistanceMatrix weighted = rescale(encoded, weight.w);

    report.distortion_raw = distortion(original, encoded);
    report.distortion_weighted = distortion(original, weighted);
    const ScaleFreeResult sf = scale_free_distortion(original, encoded);
    report.scale_free_distortion = sf.value;
    report.scale_free_lambda = sf.lambda;
    report.stress_raw = stress(original, encoded);
    report.stress_weighted = stress(original, weighted);
    report.strain_weighted = strain(original, weighted);
    report.gh_upper_bound_weighted = gh_upper_bound(original, weighted);

    const auto dgm_x = rips_persistence(original, max_hom_degree);
    const auto dgm_w = rips_persistence(weighted, max_hom_degree);
    const DiagramSetDistance bn = diagram_set_distance(dgm_x, dgm_w);
    report.bottleneck_per_degree = bn.per_degree;
    report.bottleneck_max = bn.max;
    return report;
}

std::string comparison_to_json(const ComparisonReport& report) {
    json j;
    j["distortion_raw"] = report.distortion_raw;
    j["distortion_weighted"] = report.distortion_weighted;
    j["scale_free_distortion"] = report.scale_free_distortion;
    j["scale_free_lambda"] =
        std::isinf(report.scale_free_lambda) ? json("inf") : json(report.scale_free_lambda);
    j["stress_raw"] = report.stress_raw;
    j["stress_weighted"] = report.stress_weighted;
    j["strain_weighted"] = report.strain_weighted;
    j["weight"] = report.weight;
    j["weight_residual"] = report.weight_residual;
    j["gh_upper_bound_weighted"] = report.gh_upper_bound_weighted;
    j["bottleneck_per_degree"] = report.bottleneck_per_degree;
    j["bottleneck_max"] = report.bottleneck_max;
    return j.dump(2);
}

std::string comparison_to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "quantity,value\n";
    out << "distortion_raw," << format_double(report.distortion_raw) << '\n';
    out << "distortion_weighted," << format_double(report.distortion_weighted) << '\n';
    out << "scale_free_distortion," << format_double(report.scale_free_distortion) << '\n';
    out << "scale_free_lambda," << format_double(report.scale_free_lambda) << '\n';
    out << "stress_raw," << format_double(report.stress_raw) << '\n';
    out << "stress_weighted," << format_double(report.stress_weighted) << '\n';
    out << "strain_weighted," << format_double(report.strain_weighted) << '\n';
    out << "weight," << format_double(report.weight) << '\n';
    out << "weight_residual," << format_double(report.weight_residual) << '\n';
    out << "gh_upper_bound_weighted," << format_double(report.gh_upper_bound_weighted) << '\n';
    for (std::size_t k = 0; k < report.bottleneck_per_degree.size(); ++k)
        out << "bottleneck_degree_" << k << ','
            << format_double(report.bottleneck_per_degree[k]) << '\n';
    out << "bottleneck_max," << format_double(report.bottleneck_max) << '\n';
    return out.str();
}

void run_pipeline(const ExperimentConfig& cfg) {
    const auto out = prepare_output_dir(cfg.output_dir);
    const PointCloud cloud = load_dataset(cfg.dataset);
    const DistanceMatrix d_x = base_distance_matrix(cloud, cfg.base_metric, cfg.dataset);
    const StateMetric metric = metric_for(cfg);
    const DistanceMatrix d_y =
        encoded_distance_matrix(cloud, cfg.encoding, metric, cfg.shots, cfg.dataset.seed);
    const ComparisonReport report = compare_metrics(d_x, d_y, cfg.max_hom_degree);
    const DistanceMatrix weighted = rescale(d_y, report.weight);

    write_file((out / "points.csv").string(), point_cloud_to_csv(cloud));
    write_file((out / "original_distances.csv").string(), distance_matrix_to_csv(d_x));
    write_file((out / "encoded_distances.csv").string(), distance_matrix_to_csv(d_y));
    write_file((out / "weighted_distances.csv").string(), distance_matrix_to_csv(weighted));

    const auto dgm_x = rips_persistence(d_x, cfg.max_hom_degree);
    const auto dgm_w = rips_persistence(weighted, cfg.max_hom_degree);
    write_file((out / "diagrams_original.json").string(), diagrams_to_json(dgm_x));
    write_file((out / "diagrams_encoded.json").string(), diagrams_to_json(dgm_w));
    write_file((out / "barcode_original.csv").string(), diagrams_to_barcode_csv(dgm_x));
    write_file((out / "barcode_encoded.csv").string(), diagrams_to_barcode_csv(dgm_w));

    write_file((out / "comparison.json").string(), comparison_to_json(report));
    write_file((out / "comparison.csv").string(), comparison_to_csv(report));

    const int embed_dim = cfg.encoding.name == "iqp" || cfg.encoding.name == "angle" ? 3 : 2;
    const EmbeddingResult cmds = classical_mds(weighted, embed_dim);
    write_file((out / "cmds_coordinates.csv").string(),
               point_cloud_to_csv(PointCloud(cmds.coordinates)));
}

void run_qmds(const ExperimentConfig& cfg, int hilbert_dim, const GradientSchedule& schedule,
              std::uint64_t seed) {
    const auto out = prepare_output_dir(cfg.output_dir);
    const PointCloud cloud = load_dataset(cfg.dataset);
    const DistanceMatrix d_x = base_distance_matrix(cloud, cfg.base_metric, cfg.dataset);
    const EmbeddingResult result = qmds(d_x, hilbert_dim, -1.0, schedule, seed);

    write_file((out / "embedding_result.json").string(), embedding_result_to_json(result));

    const int n = static_cast<int>(result.states.size());
    Eigen::MatrixXd fs = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            fs(i, j) = fs(j, i) =
                state_distance(result.states[i], result.states[j], StateMetric::fubini_study());
    write_file((out / "fs_distances.csv").string(),
               distance_matrix_to_csv(DistanceMatrix(std::move(fs))));

    if (hilbert_dim == 2) {
        std::ostringstream bloch;
        bloch << "x,y,z\n";
        for (const auto& s : result.states) {
            const auto a = s.amplitudes[0], b = s.amplitudes[1];
            const double x = 2.0 * (std::conj(a) * b).real();
            const double y = 2.0 * (std::conj(a) * b).imag();
            const double z = std::norm(a) - std::norm(b);
            bloch << format_double(x) << ',' << format_double(y) << ',' << format_double(z)
                  << '\n';
        }
        write_file((out / "bloch.csv").string(), bloch.str());
    }
}

}  // namespace qtda
