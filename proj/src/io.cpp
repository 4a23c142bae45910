#include "qtda/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qtda {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

double parse_double(const std::string& token) {
    if (token == "inf") return kInf;
    if (token == "-inf") return -kInf;
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad numeric token: " + token);
    return v;
}

std::vector<std::vector<double>> parse_csv_numbers(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        rows.emplace_back();
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) rows.back().push_back(parse_double(cell));
    }
    return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string distance_matrix_to_csv(const DistanceMatrix& d) {
    std::ostringstream out;
    for (int i = 0; i < d.n(); ++i) {
        for (int j = 0; j < d.n(); ++j) {
            if (j) out << ',';
            out << format_double(d(i, j));
        }
        out << '\n';
    }
    return out.str();
}

DistanceMatrix distance_matrix_from_csv(const std::string& text) {
    const auto rows = parse_csv_numbers(text);
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("distance matrix CSV is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return DistanceMatrix(std::move(m));
}

std::string distance_matrix_to_json(const DistanceMatrix& d) {
    json j;
    j["n"] = d.n();
    j["entries"] = matrix_to_json(d.entries);
    return j.dump();
}

DistanceMatrix distance_matrix_from_json(const std::string& text) {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = j.at("entries").at(i).at(k).get<double>();
    return DistanceMatrix(std::move(m));
}

std::string point_cloud_to_csv(const PointCloud& cloud) {
    std::ostringstream out;
    for (int i = 0; i < cloud.n(); ++i) {
        for (int j = 0; j < cloud.dim(); ++j) {
            if (j) out << ',';
            out << format_double(cloud.points(i, j));
        }
        out << '\n';
    }
    return out.str();
}

PointCloud point_cloud_from_csv(const std::string& text) {
    const auto rows = parse_csv_numbers(text);
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("empty point cloud CSV");
    const int m = static_cast<int>(rows[0].size());
    Eigen::MatrixXd pts(n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m)
            throw std::invalid_argument("ragged point cloud CSV");
        for (int j = 0; j < m; ++j) pts(i, j) = rows[i][j];
    }
    return PointCloud(std::move(pts));
}

std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diagrams) {
    json arr = json::array();
    for (const auto& dgm : diagrams) {
        json pairs = json::array();
        for (auto [birth, death] : dgm.pairs) {
            json pair = json::array();
            pair.push_back(birth);
            if (std::isinf(death))
                pair.push_back("inf");
            else
                pair.push_back(death);
            pairs.push_back(pair);
        }
        arr.push_back(json{{"degree", dgm.degree}, {"pairs", pairs}});
    }
    return arr.dump();
}

std::vector<PersistenceDiagram> diagrams_from_json(const std::string& text) {
    const json arr = json::parse(text);
    std::vector<PersistenceDiagram> diagrams;
    for (const auto& item : arr) {
        PersistenceDiagram dgm;
        dgm.degree = item.at("degree").get<int>();
        for (const auto& pair : item.at("pairs")) {
            const double birth = pair.at(0).get<double>();
            const double death =
                pair.at(1).is_string() ? kInf : pair.at(1).get<double>();
            dgm.pairs.emplace_back(birth, death);
        }
        diagrams.push_back(std::move(dgm));
    }
    return diagrams;
}

std::string diagrams_to_barcode_csv(const std::vector<PersistenceDiagram>& diagrams) {
    std::ostringstream out;
    out << "degree,birth,death\n";
    for (const auto& dgm : diagrams)
        for (auto [birth, death] : dgm.pairs)
            out << dgm.degree << ',' << format_double(birth) << ','
                << (std::isinf(death) ? "inf" : format_double(death)) << '\n';
    return out.str();
}

std::vector<PersistenceDiagram> diagrams_from_barcode_csv(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    std::getline(stream, line);  // header
    std::vector<PersistenceDiagram> diagrams;
    auto diagram_for = [&](int degree) -> PersistenceDiagram& {
        while (static_cast<int>(diagrams.size()) <= degree) {
            diagrams.push_back({static_cast<int>(diagrams.size()), {}});
        }
        return diagrams[degree];
    };
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string deg, birth, death;
        std::getline(cells, deg, ',');
        std::getline(cells, birth, ',');
        std::getline(cells, death, ',');
        diagram_for(std::stoi(deg)).pairs.emplace_back(parse_double(birth), parse_double(death));
    }
    return diagrams;
}

namespace {

json pure_state_json(const PureState& psi) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < psi.dim(); ++i) {
        re.push_back(psi.amplitudes[i].real());
        im.push_back(psi.amplitudes[i].imag());
    }
    return json{{"dim", psi.dim()}, {"re", re}, {"im", im}};
}

PureState pure_state_parse(const json& j) {
    const int dim = j.at("dim").get<int>();
    Eigen::VectorXcd amp(dim);
    for (int i = 0; i < dim; ++i)
        amp[i] = std::complex<double>(j.at("re").at(i).get<double>(),
                                      j.at("im").at(i).get<double>());
    return PureState(std::move(amp));
}

json density_matrix_json(const DensityMatrix& rho) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < rho.dim(); ++i) {
        json re_row = json::array(), im_row = json::array();
        for (int j = 0; j < rho.dim(); ++j) {
            re_row.push_back(rho.entries(i, j).real());
            im_row.push_back(rho.entries(i, j).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return json{{"dim", rho.dim()}, {"re", re}, {"im", im}};
}

DensityMatrix density_matrix_parse(const json& j) {
    const int dim = j.at("dim").get<int>();
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            m(i, k) = std::complex<double>(j.at("re").at(i).at(k).get<double>(),
                                           j.at("im").at(i).at(k).get<double>());
    return DensityMatrix(std::move(m));
}

}  // namespace

std::string pure_state_to_json(const PureState& psi) { return pure_state_json(psi).dump(); }

PureState pure_state_from_json(const std::string& text) {
    return pure_state_parse(json::parse(text));
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
    return density_matrix_json(rho).dump();
}

DensityMatrix density_matrix_from_json(const std::string& text) {
    return density_matrix_parse(json::parse(text));
}

std::string pure_states_to_json(const std::vector<PureState>& states) {
    json arr = json::array();
    for (const auto& s : states) arr.push_back(pure_state_json(s));
    return arr.dump();
}

std::vector<PureState> pure_states_from_json(const std::string& text) {
    std::vector<PureState> states;
    for (const auto& item : json::parse(text)) states.push_back(pure_state_parse(item));
    return states;
}

std::string density_matrices_to_json(const std::vector<DensityMatrix>& states) {
    json arr = json::array();
    for (const auto& s : states) arr.push_back(density_matrix_json(s));
    return arr.dump();
}

std::vector<DensityMatrix> density_matrices_from_json(const std::string& text) {
    std::vector<DensityMatrix> states;
    for (const auto& item : json::parse(text)) states.push_back(density_matrix_parse(item));
    return states;
}

std::string embedding_result_to_json(const EmbeddingResult& result) {
    json j;
    if (!result.states.empty()) {
        json arr = json::array();
        for (const auto& s : result.states) arr.push_back(pure_state_json(s));
        j["states"] = arr;
    } else {
        j["coordinates"] = matrix_to_json(result.coordinates);
    }
    json trace = json::array();
    for (auto [iter, value] : result.objective_trace)
        trace.push_back(json::array({iter, value}));
    j["objective_trace"] = trace;
    j["final_stress"] = result.final_stress;
    j["final_distortion"] = result.final_distortion;
    j["weight"] = result.weight;
    j["seed"] = result.seed;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for reading: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qtda
