#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mmipm/central_path.hpp"
#include "mmipm/config.hpp"
#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

enum class StepKind { Long, Short };

struct LemmaCheck {
    std::string lemma;
    double magnitude = 0.0;  // max(0, breach); 0 means the inequality held
};

// One predictor-corrector iteration. rho_* are the norms of the congestion
// vector that sized the predictor; phi is the phase potential at the
// recentered point (NaN when diagnostics are off).
struct StepTrace {
    std::size_t iter = 0;
    std::size_t phase = 0;
    double mu = 0.0;  // after the step
    double delta = 0.0;
    double rho_l2 = 0.0;
    double rho_l3 = 0.0;
    double rho_l4 = 0.0;
    double rho_linf = 0.0;
    double phi = 0.0;
    StepKind step_kind = StepKind::Long;
    std::size_t correctors = 0;
    double residual = 0.0;  // centering residual after correction
    std::vector<LemmaCheck> lemma_violations;

    double violation_max() const;
};

struct PhaseReport {
    std::size_t phase = 0;
    double mu_start = 0.0;
    double mu_end = 0.0;
    std::size_t iterations = 0;
    std::size_t long_steps = 0;
    std::size_t short_steps = 0;
    double phi_start = 0.0;
    double phi_end = 0.0;
};

// Phi = 1' ((1/mu0) XAX + I)^{-1} 1, evaluated by one shifted solve.
double potential(const IpmState& state, const SparseSymMatrix& a, double mu0,
                 const SolveParams& params = {});

// Long iff rho_l3 <= threshold_coeff * n^(1/3); the boundary counts as long.
StepKind classify_step(double rho_l3, std::size_t n, double threshold_coeff);

// Pointwise and l2 clauses of the congestion stability bound for mu0 < mu:
// rho_hat(x, mu0) >= (mu0/mu) rho_hat(x, mu) entrywise and
// ||rho_hat(x, mu)||_2 >= (mu0/mu) ||rho_hat(x, mu0)||_2.
struct StabilityViolation {
    double pointwise = 0.0;
    double l2 = 0.0;
};
StabilityViolation check_stability_lemma(const DenseVector& rho_hat_mu0,
                                         const CongestionVector& rho_hat_mu, double mu0,
                                         double mu);
StabilityViolation check_stability_lemma(const IpmState& state, const SparseSymMatrix& a,
                                         double mu0, double mu, const SolveParams& params = {});

// Phi' >= Phi - 2^3 alpha n^(1/6) ||rho_hat||_2 + 2^-11 alpha ||rho_hat||_3^2
// for consecutive central points when moving mu up; returns max(0, RHS - Phi').
double check_energy_lemma_forward(double phi_prev, double phi_next,
                                  const CongestionVector& rho_hat_target, double alpha,
                                  std::size_t n);

// Phi' <= Phi + 2^5 alpha n^(1/6) ||rho_hat||_2 - 2^-1 alpha ||rho_hat||_3^2
// when moving mu down; returns max(0, Phi' - RHS).
double check_energy_lemma_backward(double phi_prev, double phi_next,
                                   const CongestionVector& rho_hat_target, double alpha,
                                   std::size_t n);

// Standalone property checks for congested quadratic forms, evaluated with
// dense solves (n <= 32 intended). For r >= 0:
//   1'((I+R)A(I+R)+I)^{-1}1 >= 1'(A+I)^{-1}1 - 2<r,rho> + 2(1+||r||_inf)^{-4}<r,rho^2>
// and for -1/2 <= r <= 0 the upper-bound mirror with constants 6 and 3/2.
double check_general_energy_lemma(const SparseSymMatrix& a_test, const DenseVector& r);
double check_general_energy_lemma_backward(const SparseSymMatrix& a_test, const DenseVector& r);

// Trace CSV, exact header:
// iter,phase,mu,delta,rho_l2,rho_l3,rho_l4,rho_linf,phi,step_kind,correctors,residual,violation_max
// Floats carry 17 significant digits.
void emit_trace(const std::vector<StepTrace>& traces, const std::string& path);

std::vector<PhaseReport> summarize_phases(const std::vector<StepTrace>& traces);

}  // namespace mmipm
