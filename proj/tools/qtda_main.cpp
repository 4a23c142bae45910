#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "qtda/pipeline.hpp"

namespace {

using namespace qtda;

ExperimentConfig config_from_cli(const std::string& config_path, ExperimentConfig flags) {
    if (!config_path.empty()) {
        ExperimentConfig cfg = config_from_json(read_file(config_path));
        return cfg;
    }
    return flags;
}

void add_dataset_options(CLI::App* cmd, DatasetSpec& spec) {
    cmd->add_option("--dataset", spec.kind, "roots_of_unity | noisy_circle | file");
    cmd->add_option("-n,--n", spec.n, "number of points");
    cmd->add_option("-r,--radius", spec.r, "circle radius");
    cmd->add_option("--sigma", spec.sigma, "radial noise standard deviation");
    cmd->add_option("--seed", spec.seed, "random seed");
    cmd->add_option("--input", spec.path, "point cloud CSV (dataset = file)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-encoding distortion and persistent-homology toolkit"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    cfg.output_dir = default_output_dir();
    std::string config_path;

    // gen: dataset generation
    auto* gen = app.add_subcommand("gen", "generate a dataset and its distance matrix");
    add_dataset_options(gen, cfg.dataset);
    gen->add_option("--base-metric", cfg.base_metric, "euclidean | geodesic_circle");
    gen->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    // encode: cloud -> states JSON + encoded distance matrix
    auto* enc = app.add_subcommand("encode", "encode a dataset into quantum states");
    add_dataset_options(enc, cfg.dataset);
    enc->add_option("--encoding", cfg.encoding.name,
                    "angle | dense-angle | amplitude | sqrt | diagonal | iqp | utd | uts");
    enc->add_option("--pre-scale", cfg.encoding.pre_scale,
                    "coordinate rescale before encoding (0 = per-encoding default)");
    enc->add_option("--shrink", cfg.encoding.shrink, "uts shrink factor in (0, 1]");
    enc->add_flag("!--no-uniform-transform", cfg.encoding.uniform_transform,
                  "encode raw coordinates instead of uniform-transformed ones");
    enc->add_option("--quantum-metric", cfg.quantum_metric,
                    "trace | hilbert_schmidt | schatten | bures_fidelity | bures_angle | "
                    "hellinger | wigner_yanase | fubini_study");
    enc->add_option("--schatten-p", cfg.schatten_p, "Schatten order");
    enc->add_option("--shots", cfg.shots, "SWAP-test shots (0 = exact)");
    enc->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    // ph: distance matrix -> diagrams + barcode
    auto* ph = app.add_subcommand("ph", "Vietoris-Rips persistence of a distance matrix");
    std::string ph_input;
    int max_hom_degree = 1;
    ph->add_option("--distances", ph_input, "distance matrix CSV")->required();
    ph->add_option("--max-degree", max_hom_degree, "maximum homology degree");
    ph->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    // bottleneck: two diagram files -> per-degree table
    auto* bn = app.add_subcommand("bottleneck", "bottleneck distances between two diagram sets");
    std::string bn_a, bn_b;
    bn->add_option("--a", bn_a, "first diagrams JSON")->required();
    bn->add_option("--b", bn_b, "second diagrams JSON")->required();

    // compare: two distance matrices -> metric comparison report
    auto* cmp = app.add_subcommand("compare", "metric comparison of two distance matrices");
    std::string cmp_x, cmp_y;
    cmp->add_option("--x", cmp_x, "reference distance matrix CSV")->required();
    cmp->add_option("--y", cmp_y, "encoded distance matrix CSV")->required();
    cmp->add_option("--max-degree", max_hom_degree, "maximum homology degree");
    cmp->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    // qmds
    auto* qm = app.add_subcommand("qmds", "quantum MDS onto pure states");
    add_dataset_options(qm, cfg.dataset);
    int hilbert_dim = 2;
    std::uint64_t qmds_seed = 0;
    GradientSchedule schedule;
    qm->add_option("--base-metric", cfg.base_metric, "euclidean | geodesic_circle");
    qm->add_option("--hilbert-dim", hilbert_dim, "Hilbert space dimension");
    qm->add_option("--qmds-seed", qmds_seed, "initialization seed");
    qm->add_option("--max-iterations", schedule.max_iterations, "gradient step cap");
    qm->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "full encoding/persistence experiment");
    add_dataset_options(pipe, cfg.dataset);
    pipe->add_option("--config", config_path, "experiment config JSON (overrides flags)");
    pipe->add_option("--base-metric", cfg.base_metric, "euclidean | geodesic_circle");
    pipe->add_option("--encoding", cfg.encoding.name, "encoding name");
    pipe->add_option("--pre-scale", cfg.encoding.pre_scale,
                     "coordinate rescale before encoding (0 = per-encoding default)");
    pipe->add_option("--shrink", cfg.encoding.shrink, "uts shrink factor in (0, 1]");
    pipe->add_flag("!--no-uniform-transform", cfg.encoding.uniform_transform,
                   "encode raw coordinates instead of uniform-transformed ones");
    pipe->add_option("--quantum-metric", cfg.quantum_metric, "quantum metric name");
    pipe->add_option("--schatten-p", cfg.schatten_p, "Schatten order");
    pipe->add_option("--max-degree", cfg.max_hom_degree, "maximum homology degree");
    pipe->add_option("--shots", cfg.shots, "SWAP-test shots (0 = exact)");
    pipe->add_option("-o,--output-dir", cfg.output_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        namespace fs = std::filesystem;
        if (gen->parsed()) {
            const PointCloud cloud = load_dataset(cfg.dataset);
            const DistanceMatrix d = base_distance_matrix(cloud, cfg.base_metric, cfg.dataset);
            fs::path out(cfg.output_dir);
            fs::create_directories(out);
            write_file((out / "points.csv").string(), point_cloud_to_csv(cloud));
            write_file((out / "distances.csv").string(), distance_matrix_to_csv(d));
            write_file((out / "distances.json").string(), distance_matrix_to_json(d));
        } else if (enc->parsed()) {
            const PointCloud cloud = load_dataset(cfg.dataset);
            const StateMetric metric = cfg.quantum_metric.empty()
                                           ? (cfg.encoding.name == "utd" ||
                                                      cfg.encoding.name == "diagonal"
                                                  ? StateMetric::hilbert_schmidt()
                                                  : StateMetric::bures_angle())
                                           : parse_state_metric(cfg.quantum_metric,
                                                                cfg.schatten_p);
            fs::path out(cfg.output_dir);
            fs::create_directories(out);
            if (cfg.encoding.name == "utd") {
                write_file((out / "states.json").string(),
                           density_matrices_to_json(utd_encode(cloud)));
            } else if (cfg.encoding.name == "uts") {
                write_file((out / "states.json").string(),
                           pure_states_to_json(uts_encode(cloud, cfg.encoding.shrink)));
            }
            const DistanceMatrix d = encoded_distance_matrix(cloud, cfg.encoding, metric,
                                                             cfg.shots, cfg.dataset.seed);
            write_file((out / "encoded_distances.csv").string(), distance_matrix_to_csv(d));
        } else if (ph->parsed()) {
            const DistanceMatrix d = distance_matrix_from_csv(read_file(ph_input));
            const auto diagrams = rips_persistence(d, max_hom_degree);
            fs::path out(cfg.output_dir);
            fs::create_directories(out);
            write_file((out / "diagrams.json").string(), diagrams_to_json(diagrams));
            write_file((out / "barcode.csv").string(), diagrams_to_barcode_csv(diagrams));
        } else if (bn->parsed()) {
            const auto a = diagrams_from_json(read_file(bn_a));
            const auto b = diagrams_from_json(read_file(bn_b));
            const DiagramSetDistance dist = diagram_set_distance(a, b);
            std::cout << "degree,distance\n";
            for (std::size_t k = 0; k < dist.per_degree.size(); ++k)
                std::cout << k << ',' << format_double(dist.per_degree[k]) << '\n';
        } else if (cmp->parsed()) {
            const DistanceMatrix x = distance_matrix_from_csv(read_file(cmp_x));
            const DistanceMatrix y = distance_matrix_from_csv(read_file(cmp_y));
            const ComparisonReport report = compare_metrics(x, y, max_hom_degree);
            fs::path out(cfg.output_dir);
            fs::create_directories(out);
            write_file((out / "comparison.json").string(), comparison_to_json(report));
            write_file((out / "comparison.csv").string(), comparison_to_csv(report));
            std::cout << comparison_to_csv(report);
        } else if (qm->parsed()) {
            run_qmds(cfg, hilbert_dim, schedule, qmds_seed);
        } else if (pipe->parsed()) {
            ExperimentConfig run_cfg = config_from_cli(config_path, cfg);
            if (!config_path.empty() && run_cfg.output_dir == ".")
                run_cfg.output_dir = cfg.output_dir;
            run_pipeline(run_cfg);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
