#pragma once

#include <cstddef>

#include "mmipm/cg.hpp"

namespace mmipm {

enum class DiagnosticsLevel { Off, Soft, Assert };

// All tunables of the path-following solvers. The numeric defaults are the
// ones the step-size rules are calibrated for; step_coeff is the predictor
// denominator in delta = 1/(step_coeff * ||rho_hat||_3) and ls_window is the
// target band for delta * ||rho_hat_delta||_3 in the line search.
struct SolverConfig {
    double epsilon = 1e-6;
    double center_tol = 1e-10;
    double cg_rel_tol = 1e-12;
    std::size_t cg_max_iters = 0;  // 0 means 20*n + 200
    std::size_t max_correctors = 40;
    double step_coeff = 32.0;
    double ls_window_lo = 1.0 / 32.0;
    double ls_window_hi = 1.0 / 16.0;
    double threshold_coeff = 256.0;  // long/short classification, 2^8
    DiagnosticsLevel diagnostics = DiagnosticsLevel::Off;

    void validate() const;

    SolveParams solve_params() const {
        SolveParams p;
        p.rel_tol = cg_rel_tol;
        p.max_iters = cg_max_iters;
        return p;
    }
};

}  // namespace mmipm
