#pragma once

#include <cstddef>

#include "mmipm/config.hpp"
#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

// Current iterate of the barrier method for
//   G_mu(x) = (1/mu) * (x'Ax/2 - b'x) - sum_i ln(x_i).
// x stays strictly positive at all times; phase_mu0 anchors the potential
// function of the phase the iterate belongs to.
struct IpmState {
    DenseVector x;
    double mu = 1.0;
    DenseVector b;
    double phase_mu0 = 1.0;
};

// Solution of (XAX/target_mu + I) rho_hat = 1 together with its norms.
// For M-matrices rho_hat is entrywise non-negative up to solver tolerance,
// and ||rho_hat||_2 <= sqrt(n) since the system matrix dominates I.
struct CongestionVector {
    DenseVector rho_hat;
    double l2 = 0.0;
    double l3 = 0.0;
    double l4 = 0.0;
    double linf = 0.0;
    double min = 0.0;
    double max = 0.0;
    double target_mu = 0.0;
};

// grad G_mu(x) = (1/mu)(Ax - b) - 1/x
DenseVector barrier_gradient(const IpmState& state, const SparseSymMatrix& a);

double barrier_objective_f(const SparseSymMatrix& a, const DenseVector& b, const DenseVector& x);

CongestionVector unnormalized_congestion(const IpmState& state, const SparseSymMatrix& a,
                                         double target_mu, const SolveParams& params = {});

// Multiplicative Newton update rho such that x(1 + rho) is the Newton iterate
// for G_{target_mu}; computed by one shifted solve with right-hand side
// 1 - X(Ax - b)/target_mu.
DenseVector normalized_congestion(const IpmState& state, const SparseSymMatrix& a,
                                  double target_mu, const SolveParams& params = {});

// ||rho(x, mu)||_2 at the state's own mu.
double centrality_residual(const IpmState& state, const SparseSymMatrix& a,
                           const SolveParams& params = {});

// One Newton corrector x' = x(1 + rho(x, mu)). Requires ||rho||_4 <= 1/2;
// any non-positive coordinate in the result raises CorrectabilityViolated
// rather than being clamped.
IpmState corrector_step(const IpmState& state, const SparseSymMatrix& a,
                        const SolveParams& params = {});

struct CenterOutcome {
    IpmState state;
    std::size_t correctors = 0;
    double residual = 0.0;        // final ||rho||_2
    double first_rho_l2 = 0.0;    // ||rho||_2 on entry, before any corrector
    // Worst observed breach of ||rho_after||_2 <= ||rho_before||_4^2 over the
    // corrector sequence (0 when clean).
    double contraction_violation = 0.0;
};

// Runs corrector steps until ||rho(x, mu)||_2 <= center_tol. Convergence is
// doubly exponential, so the count stays small; exceeding max_correctors
// signals numerical trouble.
//
// extra_polish appends that many corrector steps after the tolerance is met.
// The l2 stopping metric leaves slack of order ||H|| ||rho||_2 in the dual
// residual X(Ax-b)/mu - 1, which matters when mu is tiny (the duality-gap
// identity degrades); one polish step contracts through it.
CenterOutcome center(const IpmState& state, const SparseSymMatrix& a, double center_tol,
                     std::size_t max_correctors, const SolveParams& params = {},
                     std::size_t extra_polish = 0);

}  // namespace mmipm
