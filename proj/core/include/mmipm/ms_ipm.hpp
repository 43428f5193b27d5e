#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmipm/config.hpp"
#include "mmipm/diagnostics.hpp"
#include "mmipm/sparse.hpp"
#include "mmipm/spectral.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

struct ScalingResult {
    // For ms_solve this is x/sqrt(mu); ms_solve_to_mu returns the raw
    // centered iterate instead (it seeds the quadratic solver).
    DenseVector x_scaled;
    double final_mu = 0.0;
    // ||XAX1 - 1||_2 of the rescaled point x/sqrt(mu), recomputed from
    // scratch at exit.
    double residual_l2 = 0.0;
    std::vector<StepTrace> trace;
    MMatrixCertificate certificate;
    // Aggregates over every rhs = 1 congestion solve in the run.
    double min_rho_hat_entry = 0.0;
    double max_rho_hat_entry = 0.0;
    // Worst magnitude per runtime lemma check (empty when diagnostics off).
    std::map<std::string, double> lemma_worst;
};

// Scales a symmetric M-matrix: walks the central path of
// G_mu(x) = (1/mu)(x'Ax/2 - b'x) - sum ln x with b = A1 - 1 from (x, mu) =
// (1, 1) upward with adaptive l3-norm step sizes, until the measured residual
// ||XAX1 - 1||_2 at x/sqrt(mu) drops to epsilon. The initial target
// mu_F = max(1, ||b||^2/eps^2) is doubled as long as the measured residual
// still exceeds epsilon.
ScalingResult ms_solve(const SparseSymMatrix& a, double epsilon, const SolverConfig& config = {});

// Same walk, stopping at the first mu >= mu_F (the final step is clipped so
// the returned point is mu_F-central exactly). x_scaled holds the raw
// centered x, not divided by sqrt(mu).
ScalingResult ms_solve_to_mu(const SparseSymMatrix& a, double mu_F,
                             const SolverConfig& config = {});

// ||XAX1 - 1||_2 for a given candidate scaling vector.
double scaling_residual(const SparseSymMatrix& a, const DenseVector& x);

}  // namespace mmipm
