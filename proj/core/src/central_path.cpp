#include "mmipm/central_path.hpp"

#include <cmath>

#include "mmipm/cg.hpp"
#include "mmipm/errors.hpp"

namespace mmipm {

DenseVector barrier_gradient(const IpmState& state, const SparseSymMatrix& a) {
    const std::size_t n = a.n();
    DenseVector g = a.matvec(state.x);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = (g[i] - state.b[i]) / state.mu - 1.0 / state.x[i];
    return g;
}

double barrier_objective_f(const SparseSymMatrix& a, const DenseVector& b, const DenseVector& x) {
    const DenseVector ax = a.matvec(x);
    return 0.5 * dot(x, ax) - dot(b, x);
}

namespace {

CongestionVector with_norms(DenseVector rho_hat, double target_mu) {
    CongestionVector c;
    c.l2 = norm2(rho_hat);
    c.l3 = norm3(rho_hat);
    c.l4 = norm4(rho_hat);
    c.linf = norm_inf(rho_hat);
    c.min = min_entry(rho_hat);
    c.max = max_entry(rho_hat);
    c.target_mu = target_mu;
    c.rho_hat = std::move(rho_hat);
    return c;
}

// rhs = 1 - X(Ax - b)/target_mu
DenseVector newton_rhs(const IpmState& state, const SparseSymMatrix& a, double target_mu) {
    DenseVector rhs = a.matvec(state.x);
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = 1.0 - state.x[i] * (rhs[i] - state.b[i]) / target_mu;
    return rhs;
}

}  // namespace

CongestionVector unnormalized_congestion(const IpmState& state, const SparseSymMatrix& a,
                                         double target_mu, const SolveParams& params) {
    if (!(target_mu > 0.0)) throw std::invalid_argument("target_mu must be positive");
    DenseVector rho_hat = solve_shifted(a, state.x, 1.0 / target_mu, ones(a.n()), params);
    return with_norms(std::move(rho_hat), target_mu);
}

DenseVector normalized_congestion(const IpmState& state, const SparseSymMatrix& a,
                                  double target_mu, const SolveParams& params) {
    if (!(target_mu > 0.0)) throw std::invalid_argument("target_mu must be positive");
    const DenseVector rhs = newton_rhs(state, a, target_mu);
    return solve_shifted(a, state.x, 1.0 / target_mu, rhs, params);
}

double centrality_residual(const IpmState& state, const SparseSymMatrix& a,
                           const SolveParams& params) {
    return norm2(normalized_congestion(state, a, state.mu, params));
}

IpmState corrector_step(const IpmState& state, const SparseSymMatrix& a,
                        const SolveParams& params) {
    const DenseVector rho = normalized_congestion(state, a, state.mu, params);
    const double l4 = norm4(rho);
    if (!(l4 <= 0.5 + 1e-12))
        throw CorrectabilityViolatedError("corrector precondition ||rho||_4 = " +
                                          std::to_string(l4) + " exceeds 1/2");
    IpmState next = state;
    for (std::size_t i = 0; i < next.x.size(); ++i) {
        next.x[i] = state.x[i] * (1.0 + rho[i]);
        if (!(next.x[i] > 0.0))
            throw CorrectabilityViolatedError("corrector produced a non-positive coordinate");
    }
    return next;
}

CenterOutcome center(const IpmState& state, const SparseSymMatrix& a, double center_tol,
                     std::size_t max_correctors, const SolveParams& params,
                     std::size_t extra_polish) {
    CenterOutcome out;
    out.state = state;
    double prev_l4 = -1.0;
    bool first = true;
    std::size_t polish_left = extra_polish;
    while (true) {
        DenseVector rho = normalized_congestion(out.state, a, out.state.mu, params);
        const double l2 = norm2(rho);
        if (first) {
            out.first_rho_l2 = l2;
            first = false;
        }
        if (prev_l4 >= 0.0) {
            const double breach = l2 - prev_l4 * prev_l4;
            if (breach > out.contraction_violation) out.contraction_violation = breach;
        }
        if (l2 <= center_tol) {
            if (polish_left == 0 || l2 == 0.0) {
                out.residual = l2;
                return out;
            }
            --polish_left;
        }
        if (out.correctors >= max_correctors)
            throw MaxCorrectorsExceededError("centering did not reach " +
                                             std::to_string(center_tol) + " within " +
                                             std::to_string(max_correctors) + " correctors");
        const double l4 = norm4(rho);
        if (!(l4 <= 0.5 + 1e-12))
            throw CorrectabilityViolatedError("corrector precondition ||rho||_4 = " +
                                              std::to_string(l4) + " exceeds 1/2");
        for (std::size_t i = 0; i < out.state.x.size(); ++i) {
            out.state.x[i] *= 1.0 + rho[i];
            if (!(out.state.x[i] > 0.0))
                throw CorrectabilityViolatedError("corrector produced a non-positive coordinate");
        }
        prev_l4 = l4;
        ++out.correctors;
    }
}

}  // namespace mmipm
