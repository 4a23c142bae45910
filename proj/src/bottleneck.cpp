#include "qtda/bottleneck.hpp"

#include <algorithm>
#include <cmath>

namespace qtda {

namespace {

using Pair = std::pair<double, double>;

// Kuhn augmenting-path maximum matching on the bipartite graph defined by
// `adjacent`; returns true when a perfect matching of the left side exists.
class BipartiteMatcher {
public:
    BipartiteMatcher(int left, int right) : n_left_(left), n_right_(right) {}

    template <typename Adjacent>
    bool has_perfect_matching(const Adjacent& adjacent) {
        match_right_.assign(n_right_, -1);
        match_left_.assign(n_left_, -1);
        int matched = 0;
        for (int u = 0; u < n_left_; ++u) {
            visited_.assign(n_right_, 0);
            if (try_augment(u, adjacent)) ++matched;
        }
        return matched == n_left_;
    }

private:
    template <typename Adjacent>
    bool try_augment(int u, const Adjacent& adjacent) {
        for (int v = 0; v < n_right_; ++v) {
            if (visited_[v] || !adjacent(u, v)) continue;
            visited_[v] = 1;
            if (match_right_[v] < 0 || try_augment(match_right_[v], adjacent)) {
                match_right_[v] = u;
                match_left_[u] = v;
                return true;
            }
        }
        return false;
    }

    int n_left_, n_right_;
    std::vector<int> match_right_, match_left_;
    std::vector<char> visited_;
};

// Feasibility of bottleneck cost c for two finite diagrams: the bipartite
// graph has each diagram augmented with one diagonal slot per point of the
// other side; a perfect matching realizes a partial matching of cost <= c.
bool feasible(const std::vector<Pair>& p, const std::vector<Pair>& q, double c) {
    const int np = static_cast<int>(p.size());
    const int nq = static_cast<int>(q.size());
    // Left: p points then q-diagonal slots. Right: q points then p-diagonal slots.
    auto adjacent = [&](int u, int v) {
        const bool u_real = u < np, v_real = v < nq;
        if (u_real && v_real) return matched_cost(p[u], q[v]) <= c;
        if (u_real) return v - nq == u && diagonal_cost(p[u]) <= c;
        if (v_real) return u - np == v && diagonal_cost(q[v]) <= c;
        return true;  // diagonal to diagonal is free
    };
    BipartiteMatcher matcher(np + nq, np + nq);
    return matcher.has_perfect_matching(adjacent);
}

}  // namespace

double matched_cost(const Pair& p, const Pair& q) {
    const bool p_inf = std::isinf(p.second), q_inf = std::isinf(q.second);
    if (p_inf != q_inf) return kInf;
    const double death_gap = p_inf ? 0.0 : std::abs(p.second - q.second);
    return std::max(std::abs(p.first - q.first), death_gap);
}

double diagonal_cost(const Pair& p) {
    if (std::isinf(p.second)) return kInf;
    return 0.5 * std::abs(p.second - p.first);
}

double bottleneck_distance(const PersistenceDiagram& p, const PersistenceDiagram& q) {
    std::vector<Pair> p_fin, q_fin;
    std::vector<double> p_ess, q_ess;
    for (const Pair& pr : p.pairs)
        (std::isinf(pr.second) ? p_ess.push_back(pr.first) : p_fin.push_back(pr));
    for (const Pair& pr : q.pairs)
        (std::isinf(pr.second) ? q_ess.push_back(pr.first) : q_fin.push_back(pr));

    if (p_ess.size() != q_ess.size()) return kInf;
    double essential_cost = 0.0;
    std::sort(p_ess.begin(), p_ess.end());
    std::sort(q_ess.begin(), q_ess.end());
    for (std::size_t i = 0; i < p_ess.size(); ++i)
        essential_cost = std::max(essential_cost, std::abs(p_ess[i] - q_ess[i]));

    if (p_fin.empty() && q_fin.empty()) return essential_cost;

    std::vector<double> candidates{0.0};
    for (const Pair& a : p_fin) candidates.push_back(diagonal_cost(a));
    for (const Pair& b : q_fin) candidates.push_back(diagonal_cost(b));
    for (const Pair& a : p_fin)
        for (const Pair& b : q_fin) candidates.push_back(matched_cost(a, b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Smallest feasible candidate; feasibility is monotone in the cost.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(p_fin, q_fin, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(essential_cost, candidates[lo]);
}

DiagramSetDistance diagram_set_distance(const std::vector<PersistenceDiagram>& ps,
                                        const std::vector<PersistenceDiagram>& qs) {
    int max_degree = -1;
    for (const auto& d : ps) max_degree = std::max(max_degree, d.degree);
    for (const auto& d : qs) max_degree = std::max(max_degree, d.degree);

    auto by_degree = [max_degree](const std::vector<PersistenceDiagram>& ds) {
        std::vector<PersistenceDiagram> out(max_degree + 1);
        for (int k = 0; k <= max_degree; ++k) out[k].degree = k;
        for (const auto& d : ds) out[d.degree] = d;
        return out;
    };
    const auto p = by_degree(ps), q = by_degree(qs);

    DiagramSetDistance result;
    for (int k = 0; k <= max_degree; ++k) {
        result.per_degree.push_back(bottleneck_distance(p[k], q[k]));
        result.max = std::max(result.max, result.per_degree.back());
    }
    return result;
}

}  // namespace qtda
