#pragma once

#include <cstddef>
#include <vector>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

struct KktSolution {
    std::vector<std::size_t> support;
    DenseVector x;  // zero off-support
    double objective = 0.0;
};

// Exact reference for min_{x >= 0} x'Ax/2 - b'x on tiny instances: enumerates
// all 2^n supports, solves the restricted dense system by LU, and keeps the
// candidates satisfying x_S >= 0 and (Ax - b) >= 0 off-support. The optimum is
// unique by strict convexity. Throws TooLargeError for n > 15. Entirely
// independent of the CG solver path.
KktSolution qo_bruteforce(const SparseSymMatrix& a, const DenseVector& b);

}  // namespace mmipm
