#include "mmipm/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mmipm {

namespace {

std::string pos(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

SparseSymMatrix SparseSymMatrix::from_triplets(std::size_t n, const std::vector<Triplet>& entries) {
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (const Triplet& t : entries) {
        if (t.row >= n || t.col >= n)
            throw std::invalid_argument("entry " + pos(t.row, t.col) + " out of range for n=" +
                                        std::to_string(n));
        if (!std::isfinite(t.value))
            throw std::invalid_argument("non-finite entry at " + pos(t.row, t.col));
        rows[t.row].emplace_back(t.col, t.value);
    }

    SparseSymMatrix m;
    m.n_ = n;
    m.row_starts_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto& r = rows[i];
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 1; k < r.size(); ++k)
            if (r[k].first == r[k - 1].first)
                throw std::invalid_argument("duplicate entry at " + pos(i, r[k].first));
        // Ensure the diagonal slot exists.
        auto it = std::lower_bound(r.begin(), r.end(), i,
                                   [](const auto& a, std::size_t c) { return a.first < c; });
        if (it == r.end() || it->first != i) r.insert(it, {i, 0.0});
        m.row_starts_[i + 1] = m.row_starts_[i] + r.size();
    }

    m.col_indices_.reserve(m.row_starts_[n]);
    m.values_.reserve(m.row_starts_[n]);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, v] : rows[i]) {
            m.col_indices_.push_back(j);
            m.values_.push_back(v);
        }
    }

    // Structural symmetry with equal values.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = m.row_starts_[i]; k < m.row_starts_[i + 1]; ++k) {
            const std::size_t j = m.col_indices_[k];
            if (j <= i) continue;
            const double vij = m.values_[k];
            bool found = false;
            for (std::size_t l = m.row_starts_[j]; l < m.row_starts_[j + 1]; ++l) {
                if (m.col_indices_[l] == i) {
                    if (m.values_[l] != vij)
                        throw std::invalid_argument("asymmetric values at " + pos(i, j));
                    found = true;
                    break;
                }
            }
            if (!found) throw std::invalid_argument("missing mirror entry for " + pos(i, j));
        }
        // The mirror check above only walks j > i; verify j < i entries exist too.
        for (std::size_t k = m.row_starts_[i]; k < m.row_starts_[i + 1]; ++k) {
            const std::size_t j = m.col_indices_[k];
            if (j >= i) break;
            bool found = false;
            for (std::size_t l = m.row_starts_[j]; l < m.row_starts_[j + 1]; ++l)
                if (m.col_indices_[l] == i) { found = true; break; }
            if (!found) throw std::invalid_argument("missing mirror entry for " + pos(i, j));
        }
    }
    return m;
}

SparseSymMatrix SparseSymMatrix::from_lower_triplets(std::size_t n,
                                                     const std::vector<Triplet>& entries) {
    std::vector<Triplet> full;
    full.reserve(2 * entries.size());
    for (const Triplet& t : entries) {
        if (t.col > t.row)
            throw std::invalid_argument("entry " + pos(t.row, t.col) +
                                        " lies above the diagonal");
        full.push_back(t);
        if (t.col != t.row) full.push_back({t.col, t.row, t.value});
    }
    return from_triplets(n, full);
}

SparseSymMatrix SparseSymMatrix::identity(std::size_t n) {
    std::vector<Triplet> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back({i, i, 1.0});
    return from_triplets(n, d);
}

double SparseSymMatrix::at(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    for (std::size_t k = row_starts_[i]; k < row_starts_[i + 1]; ++k)
        if (col_indices_[k] == j) return values_[k];
    return 0.0;
}

DenseVector SparseSymMatrix::diagonal() const {
    DenseVector d(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) d[i] = at(i, i);
    return d;
}

void SparseSymMatrix::matvec(const DenseVector& v, DenseVector& y) const {
    if (v.size() != n_) throw std::invalid_argument("matvec: dimension mismatch");
    y.assign(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t k = row_starts_[i]; k < row_starts_[i + 1]; ++k)
            s += values_[k] * v[col_indices_[k]];
        y[i] = s;
    }
}

DenseVector SparseSymMatrix::matvec(const DenseVector& v) const {
    DenseVector y;
    matvec(v, y);
    return y;
}

double SparseSymMatrix::max_abs_row_sum() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t k = row_starts_[i]; k < row_starts_[i + 1]; ++k)
            s += std::fabs(values_[k]);
        m = std::max(m, s);
    }
    return m;
}

DenseVector SparseSymMatrix::row_sums() const {
    DenseVector s(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = row_starts_[i]; k < row_starts_[i + 1]; ++k)
            s[i] += values_[k];
    return s;
}

SparseSymMatrix SparseSymMatrix::with_diagonal_shift(double gamma) const {
    SparseSymMatrix m = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = m.row_starts_[i]; k < m.row_starts_[i + 1]; ++k) {
            if (m.col_indices_[k] == i) {
                m.values_[k] += gamma;
                break;
            }
        }
    }
    return m;
}

}  // namespace mmipm
