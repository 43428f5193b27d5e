#pragma once

#include <cstddef>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

struct SpectralEstimate {
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

// Largest eigenvalue via power iteration on A shifted to be positive
// semidefinite (shift = max absolute row sum). Deterministic start vector;
// the returned value is inflated by (1+tol) so that lambda_max <= value*(1+tol)
// once the iteration has settled. Non-convergence within max_iters is reported
// through the flag, with the last estimate returned.
SpectralEstimate estimate_lambda_max(const SparseSymMatrix& a, double tol = 1e-6,
                                     std::size_t max_iters = 1000);

// Evidence that A is a symmetric M-matrix, built from the splitting
// A = sI - C with C entrywise non-negative.
struct MMatrixCertificate {
    double s = 0.0;                  // diagonal shift, max diagonal entry + 1
    double rho_c_estimate = 0.0;     // power-iteration (Rayleigh) estimate of rho(C)
    double rho_c_upper = 0.0;        // Collatz-Wielandt upper bound on rho(C)
    double lambda_min_estimate = 0.0;  // s - rho_c_estimate
    double lambda_min_lower = 0.0;     // max(0, s - rho_c_upper), a certified lower bound
    double lambda_max_estimate = 0.0;
    bool power_converged = false;
};

// Checks the off-diagonal sign pattern exactly and estimates the spectrum of
// the splitting. Throws PositiveOffDiagonalError on a sign violation and
// NotPositiveDefiniteError when rho(C) >= s*(1-tol).
MMatrixCertificate certify_mmatrix(const SparseSymMatrix& a, double tol = 1e-6,
                                   std::size_t max_iters = 1000);

}  // namespace mmipm
