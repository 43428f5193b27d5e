#pragma once

#include <cstddef>
#include <stdexcept>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

enum class Preconditioner { None, Jacobi };

struct SolveParams {
    double rel_tol = 1e-12;       // residual reduction target
    std::size_t max_iters = 0;    // 0 means the default 20*n + 200
    Preconditioner preconditioner = Preconditioner::Jacobi;

    void validate() const;
    std::size_t resolved_max_iters(std::size_t n) const;
};

struct SolveReport {
    std::size_t iterations = 0;
    double final_relative_residual = 0.0;
    bool converged = false;
};

class NotConvergedError : public std::runtime_error {
public:
    explicit NotConvergedError(const SolveReport& r)
        : std::runtime_error("linear solve did not converge: rel_residual=" +
                             std::to_string(r.final_relative_residual) + " after " +
                             std::to_string(r.iterations) + " iterations"),
          report(r) {}
    SolveReport report;
};

// Solves H y = r for H = c*XAX + I with x > 0 elementwise and c > 0, by
// preconditioned conjugate gradients. H is applied implicitly: two diagonal
// scalings around one matvec plus the identity shift, so H >= I and CG is
// well-posed. Deterministic: fixed initial guess y0 = r / diag(H).
//
// Throws NotConvergedError (carrying the report) on failure; the caller
// decides whether to retry with a larger iteration budget.
DenseVector solve_shifted(const SparseSymMatrix& a, const DenseVector& x, double c,
                          const DenseVector& r, const SolveParams& params, SolveReport* report);

inline DenseVector solve_shifted(const SparseSymMatrix& a, const DenseVector& x, double c,
                                 const DenseVector& r, const SolveParams& params = {}) {
    return solve_shifted(a, x, c, r, params, nullptr);
}

}  // namespace mmipm
