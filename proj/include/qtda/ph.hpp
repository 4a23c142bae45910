#pragma once

#include <cstdint>

#include "qtda/types.hpp"

namespace qtda {

struct Simplex {
    std::vector<std::int32_t> vertices;  // strictly increasing
    double filtration = 0.0;             // diameter of the vertex set

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Simplices sorted by (filtration, dimension, lexicographic vertices); every
// face precedes its cofaces under this order.
struct FilteredComplex {
    std::vector<Simplex> simplices;
    int max_dim = 0;
};

// All subsets of size <= max_hom_degree + 2 with filtration equal to the
// maximum pairwise distance. A simplex enters at eps = diam(sigma); relative
// to the strict-inequality convention this only relabels half-open interval
// endpoints and leaves bar lengths unchanged.
FilteredComplex vietoris_rips(const DistanceMatrix& d, int max_hom_degree,
                              std::size_t simplex_cap = 5'000'000);

struct PersistenceDiagram {
    int degree = 0;
    std::vector<std::pair<double, double>> pairs;  // death == kInf for essential classes
};

// Persistence over the two-element field by boundary-matrix column reduction
// with the twist/clearing optimization. Zero-length pairs are dropped; one
// diagram per degree 0 .. max_dim - 1.
std::vector<PersistenceDiagram> persistence(const FilteredComplex& complex);

std::vector<PersistenceDiagram> rips_persistence(const DistanceMatrix& d, int max_hom_degree,
                                                 std::size_t simplex_cap = 5'000'000);

// Count of classes alive at scale eps: birth <= eps < death.
int betti(const DistanceMatrix& d, double eps, int degree, int max_hom_degree);

// Monotonicity check: every simplex sits at or above all of its facets.
bool validate_filtration(const FilteredComplex& complex);

// Mod-2 boundary matrix of the k-simplices against the (k-1)-simplices, in
// the complex's sorted order. Exposed for inspection and tests.
Eigen::MatrixXi boundary_matrix(const FilteredComplex& complex, int k);

}  // namespace qtda
