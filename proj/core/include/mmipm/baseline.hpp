#pragma once

#include "mmipm/config.hpp"
#include "mmipm/ms_ipm.hpp"

namespace mmipm {

// Classical short-step variant of ms_solve_to_mu: the predictor always uses
// the fixed step delta = 1/(2 sqrt(n)), which keeps ||rho||_2 <= 1/2 and so
// stays correctable regardless of the congestion profile. Shares the
// corrector machinery with the adaptive solver; only the step rule differs.
ScalingResult shortstep_ms(const SparseSymMatrix& a, double mu_F, const SolverConfig& config = {});

}  // namespace mmipm
