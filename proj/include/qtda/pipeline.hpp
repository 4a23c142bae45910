#pragma once

#include <optional>
#include <string>

#include "qtda/bottleneck.hpp"
#include "qtda/dataset.hpp"
#include "qtda/encode.hpp"
#include "qtda/io.hpp"
#include "qtda/mds.hpp"
#include "qtda/metric.hpp"
#include "qtda/ph.hpp"
#include "qtda/quantum.hpp"

namespace qtda {

struct DatasetSpec {
    std::string kind = "roots_of_unity";  // roots_of_unity | noisy_circle | file
    int n = 200;
    double r = 1.0;
    double sigma = 0.05;
    std::uint64_t seed = 0;
    std::string path;  // for kind == file
};

struct EncodingSpec {
    std::string name = "utd";  // angle | dense-angle | amplitude | sqrt | diagonal |
                               // iqp | utd | uts
    double pre_scale = 0.0;    // 0 selects the per-encoding default (pi for angle,
                               // pi/2 for iqp, 1 otherwise)
    double shrink = 1.0;
    bool uniform_transform = true;  // precede the encoding by the uniform transformation
};

struct ExperimentConfig {
    DatasetSpec dataset;
    std::string base_metric = "euclidean";  // euclidean | geodesic_circle
    EncodingSpec encoding;
    std::string quantum_metric;  // empty selects hilbert_schmidt for utd/diagonal,
                                 // bures_angle otherwise
    double schatten_p = 2.0;
    int max_hom_degree = 1;
    long shots = 0;  // 0 = exact fidelities; > 0 uses the SWAP-test estimator
    std::string output_dir = ".";
};

ExperimentConfig config_from_json(const std::string& text);

PointCloud load_dataset(const DatasetSpec& spec);

DistanceMatrix base_distance_matrix(const PointCloud& cloud, const std::string& base_metric,
                                    const DatasetSpec& spec);

// Encoded pairwise distance matrix for a cloud under the named encoding; see
// EncodingSpec for the preprocessing knobs. shots > 0 estimates pure-state
// fidelities with the SWAP test (seeded per pair off `seed`).
DistanceMatrix encoded_distance_matrix(const PointCloud& cloud, const EncodingSpec& encoding,
                                       const StateMetric& metric, long shots = 0,
                                       std::uint64_t seed = 0);

struct ComparisonReport {
    double distortion_raw = 0.0;
    double distortion_weighted = 0.0;
    double scale_free_distortion = 0.0;
    double scale_free_lambda = 0.0;
    double stress_raw = 0.0;
    double stress_weighted = 0.0;
    double strain_weighted = 0.0;
    double weight = 0.0;
    double weight_residual = 0.0;
    double gh_upper_bound_weighted = 0.0;
    std::vector<double> bottleneck_per_degree;
    double bottleneck_max = 0.0;
};

ComparisonReport compare_metrics(const DistanceMatrix& original, const DistanceMatrix& encoded,
                                 int max_hom_degree);

std::string comparison_to_json(const ComparisonReport& report);
std::string comparison_to_csv(const ComparisonReport& report);

// Full experiment: writes distance matrices, diagrams, barcodes, encoded
// states, comparison report and a cMDS re-embedding into cfg.output_dir.
void run_pipeline(const ExperimentConfig& cfg);

// Quantum MDS run: embedding result JSON, exact Fubini-Study distance CSV,
// and Bloch coordinates CSV when hilbert_dim == 2.
void run_qmds(const ExperimentConfig& cfg, int hilbert_dim, const GradientSchedule& schedule,
              std::uint64_t seed);

// Default output directory: $QTDA_OUTPUT_DIR if set, else ".".
std::string default_output_dir();

}  // namespace qtda
