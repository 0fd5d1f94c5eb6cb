#include "nct/linalg.hpp"

#include "nct/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace nct {

namespace {

LaurentPoly lcm_poly(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly g = LaurentPoly::gcd(a, b);
    return LaurentPoly::divexact(a * b, g);
}

}  // namespace

int rank_over_field(const Matrix& in) {
    if (in.empty()) return 0;
    size_t rows = in.size(), cols = in[0].size();
    std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (in[i].size() != cols) throw std::invalid_argument("ragged matrix");
        LaurentPoly l(mpq_class(1));
        for (const auto& s : in[i])
            if (!s.is_zero() && !s.den().is_one()) l = lcm_poly(l, s.den());
        for (size_t j = 0; j < cols; ++j) {
            const Scalar& s = in[i][j];
            if (s.is_zero()) continue;
            a[i][j] = s.den().is_one() ? s.num() * l : s.num() * LaurentPoly::divexact(l, s.den());
        }
    }
    LaurentPoly prev(mpq_class(1));
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                LaurentPoly x = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = LaurentPoly::divexact(x, prev);
            }
            a[i][c] = LaurentPoly();
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

Matrix identity_matrix(size_t n) {
    Matrix m(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::one();
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix r(n, std::vector<Scalar>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

GainGraph::GainGraph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
}

int GainGraph::add_vertex() {
    parent_.push_back(size());
    weight_.push_back(Scalar::one());
    rank_.push_back(0);
    dead_.push_back(0);
    return size() - 1;
}

std::pair<int, Scalar> GainGraph::find(int i) {
    if (parent_[i] == i) return {i, Scalar::one()};
    auto [root, w] = find(parent_[i]);
    weight_[i] = weight_[i] * w;
    parent_[i] = root;
    return {root, weight_[i]};
}

bool GainGraph::dead(int i) { return dead_[find(i).first] != 0; }

void GainGraph::kill(int i) { dead_[find(i).first] = 1; }

void GainGraph::constrain(int i, const Scalar& ci, int j, const Scalar& cj) {
    if (i == j) {
        Scalar s = ci + cj;
        if (!s.is_zero()) kill(i);
        return;
    }
    if (ci.is_zero() && cj.is_zero()) return;
    if (ci.is_zero()) return kill(j);
    if (cj.is_zero()) return kill(i);
    Scalar rho = -(cj / ci);  // x_i = rho x_j
    auto [ri, wi] = find(i);
    auto [rj, wj] = find(j);
    if (ri == rj) {
        if (wi != rho * wj) dead_[ri] = 1;
        return;
    }
    // x_ri = (rho wj / wi) x_rj
    Scalar w = rho * wj / wi;
    char d = dead_[ri] | dead_[rj];
    if (rank_[ri] > rank_[rj]) {
        parent_[rj] = ri;
        weight_[rj] = w.inv();
        dead_[ri] = d;
    } else {
        parent_[ri] = rj;
        weight_[ri] = w;
        dead_[rj] = d;
        if (rank_[ri] == rank_[rj]) ++rank_[rj];
    }
}

std::vector<int> GainGraph::live_roots() {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (find(i).first == i && !dead_[i]) out.push_back(i);
    return out;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (const auto& [k, v] : x) {
        auto [it, fresh] = y.try_emplace(k, a * v);
        if (fresh) continue;
        it->second += a * v;
        if (it->second.is_zero()) y.erase(it);
    }
}

void SparseEchelon::reduce(SparseVec& v, SparseVec& tag) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        int key = it->first;
        Scalar c = it->second;
        axpy(v, -c, row->second.v);
        axpy(tag, -c, row->second.tag);
        it = v.upper_bound(key);
    }
}

bool SparseEchelon::insert(SparseVec v, SparseVec tag) {
    reduce(v, tag);
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    Scalar inv = v.begin()->second.inv();
    for (auto& kv : v) kv.second *= inv;
    for (auto& kv : tag) kv.second *= inv;
    rows_.emplace(pivot, Row{std::move(v), std::move(tag)});
    return true;
}

std::optional<SparseVec> SparseEchelon::express(const SparseVec& v) const {
    SparseVec w = v, tag;
    reduce(w, tag);
    if (!w.empty()) return std::nullopt;
    for (auto& kv : tag) kv.second = -kv.second;
    return tag;
}

}  // namespace nct
