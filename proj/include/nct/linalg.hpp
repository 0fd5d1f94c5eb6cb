#pragma once

#include "nct/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nct {

using Matrix = std::vector<std::vector<Scalar>>;
using SparseVec = std::map<int, Scalar>;

// Exact rank over Q(t): rows are cleared of denominators, then
// fraction-free (Bareiss) elimination over Q[t, 1/t].
int rank_over_field(const Matrix& m);

Matrix identity_matrix(size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);

// Union-find over unknowns x_0..x_{n-1} subject to constraints
// c_i x_i + c_j x_j = 0. A component is dead when the constraints force it
// to zero (single-term constraint or a loop whose weight product is not 1).
// Live components span the solution space; potentials give x_v = w_v x_root.
class GainGraph {
public:
    explicit GainGraph(int n = 0);

    int add_vertex();
    int size() const { return static_cast<int>(parent_.size()); }

    void kill(int i);
    void constrain(int i, const Scalar& ci, int j, const Scalar& cj);

    // Root and weight w with x_i = w * x_root.
    std::pair<int, Scalar> find(int i);
    bool dead(int i);
    std::vector<int> live_roots();
    int live_count() { return static_cast<int>(live_roots().size()); }
    // Rank of the constraint system.
    int rank() { return size() - live_count(); }

private:
    std::vector<int> parent_;
    std::vector<Scalar> weight_;
    std::vector<int> rank_;
    std::vector<char> dead_;
};

// Incremental row echelon over Q(t). Each stored row keeps a tag recording
// its expression in caller-named basis vectors.
class SparseEchelon {
public:
    // Reduce v against stored rows; tag follows the same operations.
    void reduce(SparseVec& v, SparseVec& tag) const;
    // Insert; returns true when v was independent of the stored rows.
    bool insert(SparseVec v, SparseVec tag = {});
    // Some t with v - sum t_i b_i in span(untagged rows), if v is in the span.
    std::optional<SparseVec> express(const SparseVec& v) const;
    size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVec v;
        SparseVec tag;
    };
    std::map<int, Row> rows_;
};

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

}  // namespace nct
