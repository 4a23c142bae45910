#pragma once

#include "qtda/ph.hpp"

namespace qtda {

// l-infinity cost of a matched pair; inf - inf counts as 0, finite vs
// infinite death is +inf.
double matched_cost(const std::pair<double, double>& p, const std::pair<double, double>& q);

// Cost of leaving a point unmatched: half its bar length (+inf for essential
// classes, which can never be dropped).
double diagonal_cost(const std::pair<double, double>& p);

// Exact bottleneck semimetric. Infinite-death points are matched among
// themselves by the max-gap-minimizing sorted assignment (+inf if the counts
// differ); finite points by binary search over realizable candidate costs
// with a maximum-bipartite-matching feasibility test.
double bottleneck_distance(const PersistenceDiagram& p, const PersistenceDiagram& q);

struct DiagramSetDistance {
    std::vector<double> per_degree;
    double max = 0.0;
};

// Per-degree bottleneck distances plus their maximum; missing degrees are
// treated as empty diagrams.
DiagramSetDistance diagram_set_distance(const std::vector<PersistenceDiagram>& ps,
                                        const std::vector<PersistenceDiagram>& qs);

}  // namespace qtda
