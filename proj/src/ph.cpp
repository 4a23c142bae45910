#include "qtda/ph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qtda {

namespace {

// Combinatorial rank of a strictly increasing vertex list: sum of C(v_i, i+1).
// Unique per dimension; vertices < 300 and dim <= 6 keep this within 64 bits.
class BinomialTable {
public:
    BinomialTable(int n, int k) : max_k_(k), table_((n + 1) * (k + 1), 0) {
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min(i, k); ++j)
                at(i, j) = at(i - 1, j - 1) + at(i - 1, j);
        }
    }
    std::uint64_t operator()(int n, int k) const {
        return k > max_k_ ? 0 : table_[static_cast<std::size_t>(n) * (max_k_ + 1) + k];
    }

private:
    std::uint64_t& at(int n, int k) {
        return table_[static_cast<std::size_t>(n) * (max_k_ + 1) + k];
    }
    int max_k_;
    std::vector<std::uint64_t> table_;
};

std::uint64_t simplex_rank(const std::vector<std::int32_t>& vertices, const BinomialTable& binom) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        rank += binom(vertices[i], static_cast<int>(i) + 1);
    return rank;
}

// Max-heap of row indices with mod-2 cancellation of duplicate entries.
class Column {
public:
    void push(std::int32_t row) {
        heap_.push_back(row);
        std::push_heap(heap_.begin(), heap_.end());
    }
    // Largest surviving row index, or -1 when the column is zero.
    std::int32_t pivot() {
        while (!heap_.empty()) {
            const std::int32_t top = heap_.front();
            std::pop_heap(heap_.begin(), heap_.end());
            heap_.pop_back();
            if (!heap_.empty() && heap_.front() == top) {
                std::pop_heap(heap_.begin(), heap_.end());
                heap_.pop_back();
                continue;  // pair cancels mod 2
            }
            heap_.push_back(top);
            std::push_heap(heap_.begin(), heap_.end());
            return top;
        }
        return -1;
    }
    std::vector<std::int32_t> compact() {
        std::sort(heap_.begin(), heap_.end());
        std::vector<std::int32_t> out;
        for (std::size_t i = 0; i < heap_.size();) {
            if (i + 1 < heap_.size() && heap_[i] == heap_[i + 1]) {
                i += 2;
            } else {
                out.push_back(heap_[i]);
                ++i;
            }
        }
        return out;
    }

private:
    std::vector<std::int32_t> heap_;
};

}  // namespace

FilteredComplex vietoris_rips(const DistanceMatrix& d, int max_hom_degree,
                              std::size_t simplex_cap) {
    if (max_hom_degree < 0)
        throw std::invalid_argument("vietoris_rips: max_hom_degree must be >= 0");
    const int n = d.n();
    const int max_dim = max_hom_degree + 1;

    FilteredComplex complex;
    complex.max_dim = max_dim;
    std::vector<std::int32_t> current;
    // Depth-first enumeration of vertex subsets, tracking the running diameter.
    auto extend = [&](auto&& self, int next, double diam) -> void {
        for (std::int32_t v = next; v < n; ++v) {
            double dv = diam;
            for (std::int32_t u : current) dv = std::max(dv, d(u, v));
            current.push_back(v);
            if (complex.simplices.size() >= simplex_cap)
                throw std::runtime_error("vietoris_rips: simplex cap exceeded");
            complex.simplices.push_back({current, dv});
            if (static_cast<int>(current.size()) <= max_dim) self(self, v + 1, dv);
            current.pop_back();
        }
    };
    extend(extend, 0, 0.0);

    std::sort(complex.simplices.begin(), complex.simplices.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.filtration != b.filtration) return a.filtration < b.filtration;
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() < b.vertices.size();
                  return a.vertices < b.vertices;
              });
    return complex;
}

std::vector<PersistenceDiagram> persistence(const FilteredComplex& complex) {
    const int max_dim = complex.max_dim;
    const auto& simplices = complex.simplices;
    const std::int32_t count = static_cast<std::int32_t>(simplices.size());

    int n_vertices = 0;
    for (const Simplex& s : simplices)
        if (!s.vertices.empty())
            n_vertices = std::max(n_vertices, static_cast<int>(s.vertices.back()) + 1);
    const BinomialTable binom(n_vertices, max_dim + 1);

    std::unordered_map<std::uint64_t, std::int32_t> index_of;  // key packs (rank, dim)
    index_of.reserve(simplices.size() * 2);
    auto key_of = [&](const std::vector<std::int32_t>& v) {
        return simplex_rank(v, binom) * 8 + static_cast<std::uint64_t>(v.size() - 1);
    };
    for (std::int32_t i = 0; i < count; ++i) index_of[key_of(simplices[i].vertices)] = i;

    std::vector<std::int32_t> pair_of(count, -1);  // creator -> destroyer
    std::vector<char> cleared(count, 0);
    std::vector<std::int32_t> essential;
    std::unordered_map<std::int32_t, std::vector<std::int32_t>> reduced;  // pivot -> column
    std::vector<std::int32_t> facet;

    // Reduce top dimension first so that deaths found there clear the
    // corresponding creator columns below (twist optimization). By the time
    // dimension k is processed all degree-k deaths are known, so a column of
    // dimension k < max_dim that reduces to zero is an essential class.
    for (int dim = max_dim; dim >= 1; --dim) {
        reduced.clear();
        for (std::int32_t j = 0; j < count; ++j) {
            const Simplex& s = simplices[j];
            if (s.dim() != dim || cleared[j]) continue;
            Column column;
            facet.assign(s.vertices.begin(), s.vertices.end());
            for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                column.push(index_of.at(key_of(facet)));
                facet.insert(facet.begin() + static_cast<std::ptrdiff_t>(drop),
                             s.vertices[drop]);
            }
            for (;;) {
                const std::int32_t pivot = column.pivot();
                if (pivot < 0) {
                    if (dim < max_dim) essential.push_back(j);
                    break;
                }
                auto it = reduced.find(pivot);
                if (it == reduced.end()) {
                    pair_of[pivot] = j;
                    cleared[pivot] = 1;
                    reduced.emplace(pivot, column.compact());
                    break;
                }
                for (std::int32_t row : it->second) column.push(row);
            }
        }
    }

    std::vector<PersistenceDiagram> diagrams(max_dim);
    for (int k = 0; k < max_dim; ++k) diagrams[k].degree = k;
    for (std::int32_t i = 0; i < count; ++i) {
        const Simplex& s = simplices[i];
        if (pair_of[i] >= 0) {
            const double death = simplices[pair_of[i]].filtration;
            if (s.filtration < death)
                diagrams[s.dim()].pairs.emplace_back(s.filtration, death);
        } else if (s.dim() == 0) {
            diagrams[0].pairs.emplace_back(s.filtration, kInf);
        }
    }
    for (std::int32_t j : essential)
        diagrams[simplices[j].dim()].pairs.emplace_back(simplices[j].filtration, kInf);
    for (auto& dgm : diagrams) std::sort(dgm.pairs.begin(), dgm.pairs.end());
    return diagrams;
}

std::vector<PersistenceDiagram> rips_persistence(const DistanceMatrix& d, int max_hom_degree,
                                                 std::size_t simplex_cap) {
    return persistence(vietoris_rips(d, max_hom_degree, simplex_cap));
}

int betti(const DistanceMatrix& d, double eps, int degree, int max_hom_degree) {
    if (eps < 0.0) throw std::invalid_argument("betti: eps must be >= 0");
    if (degree > max_hom_degree)
        throw std::invalid_argument("betti: degree exceeds max_hom_degree");
    const auto diagrams = rips_persistence(d, max_hom_degree);
    int count = 0;
    for (auto [birth, death] : diagrams[degree].pairs)
        if (birth <= eps && eps < death) ++count;
    return count;
}

bool validate_filtration(const FilteredComplex& complex) {
    std::unordered_map<std::uint64_t, double> filtration_of;
    int n_vertices = 0;
    for (const Simplex& s : complex.simplices)
        if (!s.vertices.empty())
            n_vertices = std::max(n_vertices, static_cast<int>(s.vertices.back()) + 1);
    const BinomialTable binom(n_vertices, complex.max_dim + 1);
    auto key_of = [&](const std::vector<std::int32_t>& v) {
        return simplex_rank(v, binom) * 8 + static_cast<std::uint64_t>(v.size() - 1);
    };
    for (const Simplex& s : complex.simplices) filtration_of[key_of(s.vertices)] = s.filtration;
    std::vector<std::int32_t> facet;
    for (const Simplex& s : complex.simplices) {
        if (s.dim() == 0) continue;
        facet.assign(s.vertices.begin(), s.vertices.end());
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = filtration_of.find(key_of(facet));
            if (it == filtration_of.end() || it->second > s.filtration) return false;
            facet.insert(facet.begin() + static_cast<std::ptrdiff_t>(drop), s.vertices[drop]);
        }
    }
    return true;
}

Eigen::MatrixXi boundary_matrix(const FilteredComplex& complex, int k) {
    if (k < 1) throw std::invalid_argument("boundary_matrix: k must be >= 1");
    std::vector<const Simplex*> rows, cols;
    for (const Simplex& s : complex.simplices) {
        if (s.dim() == k - 1) rows.push_back(&s);
        if (s.dim() == k) cols.push_back(&s);
    }
    std::unordered_map<std::uint64_t, int> row_index;
    int n_vertices = 0;
    for (const Simplex& s : complex.simplices)
        if (!s.vertices.empty())
            n_vertices = std::max(n_vertices, static_cast<int>(s.vertices.back()) + 1);
    const BinomialTable binom(n_vertices, complex.max_dim + 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[simplex_rank(rows[i]->vertices, binom)] = static_cast<int>(i);

    Eigen::MatrixXi b = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    std::vector<std::int32_t> facet;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        facet.assign(cols[j]->vertices.begin(), cols[j]->vertices.end());
        for (std::size_t drop = 0; drop < cols[j]->vertices.size(); ++drop) {
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            b(row_index.at(simplex_rank(facet, binom)), static_cast<Eigen::Index>(j)) = 1;
            facet.insert(facet.begin() + static_cast<std::ptrdiff_t>(drop),
                         cols[j]->vertices[drop]);
        }
    }
    return b;
}

}  // namespace qtda
