#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "mmipm/vectors.hpp"

namespace mmipm {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

// Symmetric sparse matrix in compressed-row layout. Both triangles are stored
// so matvec is branch-free. Immutable after construction and safe to share
// across threads.
//
// Structural invariants, checked by the builders:
//   - entry (i,j) present iff (j,i) present, with equal values
//   - column indices strictly increasing within each row, no duplicates
//   - every diagonal entry stored (explicit zeros allowed)
class SparseSymMatrix {
public:
    SparseSymMatrix() = default;  // empty 0x0 matrix

    // Builds from a full list of entries covering both triangles (each
    // off-diagonal pair must appear twice with equal values). A missing
    // diagonal entry is stored as an explicit zero.
    static SparseSymMatrix from_triplets(std::size_t n, const std::vector<Triplet>& entries);

    // Builds from diagonal-and-lower-triangle entries, mirroring the strict
    // lower triangle into the upper one.
    static SparseSymMatrix from_lower_triplets(std::size_t n, const std::vector<Triplet>& entries);

    static SparseSymMatrix identity(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t nnz() const { return col_indices_.size(); }

    const std::vector<std::size_t>& row_starts() const { return row_starts_; }
    const std::vector<std::size_t>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    // Stored value at (i,j), zero if the position is not stored.
    double at(std::size_t i, std::size_t j) const;

    DenseVector diagonal() const;

    // y = A v, fixed row-major summation order.
    void matvec(const DenseVector& v, DenseVector& y) const;
    DenseVector matvec(const DenseVector& v) const;

    // max_i sum_j |A_ij|; upper bound on the spectral radius.
    double max_abs_row_sum() const;

    DenseVector row_sums() const;

    // A + gamma*I; diagonal slots are always stored, so only values change.
    SparseSymMatrix with_diagonal_shift(double gamma) const;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_starts_;
    std::vector<std::size_t> col_indices_;
    std::vector<double> values_;
};

}  // namespace mmipm
