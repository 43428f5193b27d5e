#include "mmipm/baseline.hpp"

#include <cmath>

#include "mmipm/spectral.hpp"
#include "path_engine.hpp"

namespace mmipm {

ScalingResult shortstep_ms(const SparseSymMatrix& a, double mu_F, const SolverConfig& config) {
    config.validate();
    if (!(mu_F > 0.0) || !std::isfinite(mu_F))
        throw std::invalid_argument("shortstep_ms: mu_F must be positive and finite");
    const MMatrixCertificate cert = certify_mmatrix(a);

    detail::PathRun run;
    run.state.x = ones(a.n());
    run.state.mu = 1.0;
    run.state.phase_mu0 = 1.0;
    DenseVector a1 = a.matvec(run.state.x);
    run.state.b.resize(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) run.state.b[i] = a1[i] - 1.0;
    run.diag = detail::DiagRuntime(config.diagnostics);

    detail::run_ms_path(a, run, mu_F, config, detail::MsStepRule::FixedShortStep);

    ScalingResult res;
    res.final_mu = run.state.mu;
    DenseVector x_tilde = run.state.x;
    const double root_mu = std::sqrt(run.state.mu);
    for (double& v : x_tilde) v /= root_mu;
    res.residual_l2 = scaling_residual(a, x_tilde);
    res.x_scaled = std::move(run.state.x);
    res.trace = std::move(run.trace);
    res.certificate = cert;
    res.min_rho_hat_entry = run.diag.min_rho_hat();
    res.max_rho_hat_entry = run.diag.max_rho_hat();
    res.lemma_worst = run.diag.worst();
    return res;
}

}  // namespace mmipm
