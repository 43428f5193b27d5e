#pragma once

#include <cstddef>
#include <vector>

namespace mmipm {

using DenseVector = std::vector<double>;

DenseVector ones(std::size_t n);
DenseVector zeros(std::size_t n);

double dot(const DenseVector& a, const DenseVector& b);
double norm2(const DenseVector& v);
double norm3(const DenseVector& v);
double norm4(const DenseVector& v);
double norm_inf(const DenseVector& v);

// p in {2, 3, 4}; use norm_inf for the max norm.
double norm_p(const DenseVector& v, int p);

double min_entry(const DenseVector& v);
double max_entry(const DenseVector& v);
bool all_finite(const DenseVector& v);
bool all_positive(const DenseVector& v);

}  // namespace mmipm
