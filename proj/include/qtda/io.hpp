#pragma once

#include <string>

#include "qtda/mds.hpp"
#include "qtda/ph.hpp"
#include "qtda/types.hpp"

namespace qtda {

// All numeric output is written with 17 significant digits so that every
// emitted file round-trips bit-exactly through the matching reader.
std::string format_double(double v);

std::string distance_matrix_to_csv(const DistanceMatrix& d);
DistanceMatrix distance_matrix_from_csv(const std::string& text);

std::string distance_matrix_to_json(const DistanceMatrix& d);
DistanceMatrix distance_matrix_from_json(const std::string& text);

std::string point_cloud_to_csv(const PointCloud& cloud);
PointCloud point_cloud_from_csv(const std::string& text);

std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diagrams);
std::vector<PersistenceDiagram> diagrams_from_json(const std::string& text);

// Rows `degree,birth,death`, with `inf` for infinite deaths.
std::string diagrams_to_barcode_csv(const std::vector<PersistenceDiagram>& diagrams);
std::vector<PersistenceDiagram> diagrams_from_barcode_csv(const std::string& text);

std::string pure_state_to_json(const PureState& psi);
PureState pure_state_from_json(const std::string& text);

std::string density_matrix_to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const std::string& text);

std::string pure_states_to_json(const std::vector<PureState>& states);
std::vector<PureState> pure_states_from_json(const std::string& text);

std::string density_matrices_to_json(const std::vector<DensityMatrix>& states);
std::vector<DensityMatrix> density_matrices_from_json(const std::string& text);

std::string embedding_result_to_json(const EmbeddingResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qtda
