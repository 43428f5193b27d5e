#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

class MatrixMarketError : public std::runtime_error {
public:
    explicit MatrixMarketError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix Market coordinate format, symmetric real: 1-based indices, lower
// triangle stored. The reader requires the exact header
//   %%MatrixMarket matrix coordinate real symmetric
// and mirrors the strict lower triangle to full storage.
SparseSymMatrix read_matrix_market(std::istream& in);
SparseSymMatrix read_matrix_market_file(const std::string& path);

void write_matrix_market(std::ostream& out, const SparseSymMatrix& a);
void write_matrix_market_file(const std::string& path, const SparseSymMatrix& a);

// Plain-text vector file: one value per line, '%' or '#' comment lines allowed.
DenseVector read_vector_file(const std::string& path);
void write_vector_file(const std::string& path, const DenseVector& v);

}  // namespace mmipm
