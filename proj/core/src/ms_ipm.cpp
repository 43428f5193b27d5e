#include "mmipm/ms_ipm.hpp"

#include <cmath>

#include "mmipm/errors.hpp"
#include "path_engine.hpp"

namespace mmipm {

namespace {

IpmState initial_state(const SparseSymMatrix& a) {
    IpmState s;
    s.x = ones(a.n());
    s.mu = 1.0;
    s.phase_mu0 = 1.0;
    DenseVector a1 = a.matvec(s.x);
    s.b.resize(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) s.b[i] = a1[i] - 1.0;
    return s;
}

ScalingResult finish(const SparseSymMatrix& a, detail::PathRun&& run,
                     MMatrixCertificate cert, bool rescale) {
    ScalingResult res;
    res.final_mu = run.state.mu;
    const double root_mu = std::sqrt(run.state.mu);
    DenseVector x_tilde = run.state.x;
    for (double& v : x_tilde) v /= root_mu;
    res.residual_l2 = scaling_residual(a, x_tilde);

    // An approximate scaling with residual below 1 satisfies
    // ||x||_2^2 <= 2n / lambda_min(A); checked against the certified bound.
    if (run.diag.on() && res.residual_l2 < 1.0 && cert.lambda_min_lower > 0.0) {
        const double bound = 2.0 * static_cast<double>(a.n()) / cert.lambda_min_lower;
        run.diag.record(nullptr, "x_norm_bound",
                        (dot(x_tilde, x_tilde) - bound) / bound, detail::kTolXNormBound);
    }

    res.x_scaled = rescale ? std::move(x_tilde) : std::move(run.state.x);
    res.trace = std::move(run.trace);
    res.certificate = cert;
    res.min_rho_hat_entry = run.diag.min_rho_hat();
    res.max_rho_hat_entry = run.diag.max_rho_hat();
    res.lemma_worst = run.diag.worst();
    return res;
}

}  // namespace

double scaling_residual(const SparseSymMatrix& a, const DenseVector& x) {
    DenseVector xax = a.matvec(x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = x[i] * xax[i] - 1.0;
        s += r * r;
    }
    return std::sqrt(s);
}

ScalingResult ms_solve(const SparseSymMatrix& a, double epsilon, const SolverConfig& config) {
    config.validate();
    if (!(epsilon > 0.0)) throw std::invalid_argument("ms_solve: epsilon must be positive");
    const MMatrixCertificate cert = certify_mmatrix(a);

    detail::PathRun run;
    run.state = initial_state(a);
    run.diag = detail::DiagRuntime(config.diagnostics);

    const double nb = norm2(run.state.b);
    double mu_f = std::max(1.0, (nb / epsilon) * (nb / epsilon));
    if (!std::isfinite(mu_f)) throw std::invalid_argument("ms_solve: epsilon too small");

    while (true) {
        detail::run_ms_path(a, run, mu_f, config, detail::MsStepRule::Adaptive);
        DenseVector x_tilde = run.state.x;
        const double root_mu = std::sqrt(run.state.mu);
        for (double& v : x_tilde) v /= root_mu;
        if (scaling_residual(a, x_tilde) <= epsilon) break;
        // The mu_F bound from the gradient-optimality argument can
        // undershoot; keep doubling until the measured residual complies.
        mu_f *= 2.0;
        if (!std::isfinite(mu_f))
            throw NonFiniteIterateError("ms_solve: residual target unreachable");
    }
    return finish(a, std::move(run), cert, /*rescale=*/true);
}

ScalingResult ms_solve_to_mu(const SparseSymMatrix& a, double mu_F, const SolverConfig& config) {
    config.validate();
    if (!(mu_F > 0.0) || !std::isfinite(mu_F))
        throw std::invalid_argument("ms_solve_to_mu: mu_F must be positive and finite");
    const MMatrixCertificate cert = certify_mmatrix(a);

    detail::PathRun run;
    run.state = initial_state(a);
    run.diag = detail::DiagRuntime(config.diagnostics);
    detail::run_ms_path(a, run, mu_F, config, detail::MsStepRule::Adaptive);
    return finish(a, std::move(run), cert, /*rescale=*/false);
}

}  // namespace mmipm
