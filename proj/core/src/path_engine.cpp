#include "path_engine.hpp"

#include <algorithm>

#include "mmipm/cg.hpp"

namespace mmipm::detail {

void check_finite(const IpmState& state) {
    if (!all_finite(state.x) || !std::isfinite(state.mu))
        throw NonFiniteIterateError("iterate overflowed at mu = " + std::to_string(state.mu));
}

double potential_sum(const SparseSymMatrix& a, PathRun& run, double mu0,
                     const SolverConfig& config, std::vector<LemmaCheck>* sink) {
    const CongestionVector c =
        unnormalized_congestion(run.state, a, mu0, config.solve_params());
    run.diag.observe_congestion(c, sink);
    double s = 0.0;
    for (double v : c.rho_hat) s += v;
    return s;
}

CenterOutcome center_recorded(const SparseSymMatrix& a, PathRun& run, double mu,
                              const SolverConfig& config, std::vector<LemmaCheck>* sink,
                              std::size_t extra_polish) {
    IpmState pre = run.state;
    pre.mu = mu;
    CenterOutcome out = center(pre, a, config.center_tol, config.max_correctors,
                               config.solve_params(), extra_polish);
    if (run.diag.on())
        run.diag.record(sink, "corrector_contraction", out.contraction_violation,
                        kTolContraction);
    return out;
}

namespace {

// Retries a congestion solve once with a 10x iteration budget before giving
// up; persistent failure propagates NotConvergedError to the caller.
CongestionVector congestion_retrying(const IpmState& state, const SparseSymMatrix& a,
                                     double target_mu, const SolverConfig& config) {
    try {
        return unnormalized_congestion(state, a, target_mu, config.solve_params());
    } catch (const NotConvergedError&) {
        SolveParams sp = config.solve_params();
        sp.max_iters = 10 * sp.resolved_max_iters(a.n());
        return unnormalized_congestion(state, a, target_mu, sp);
    }
}

}  // namespace

void run_ms_path(const SparseSymMatrix& a, PathRun& run, double mu_F, const SolverConfig& config,
                 MsStepRule rule) {
    const std::size_t n = a.n();
    const double fixed_delta = 0.5 / std::sqrt(static_cast<double>(n));

    while (run.state.mu < mu_F) {
        // A new phase starts once mu has doubled; the potential anchor is the
        // phase's starting mu.
        if (run.state.mu >= 2.0 * run.state.phase_mu0) {
            run.state.phase_mu0 = run.state.mu;
            ++run.phase_index;
            run.phi_valid = false;
        }
        const double mu = run.state.mu;
        const double anchor = run.state.phase_mu0;

        StepTrace row;
        row.iter = ++run.iter;
        row.phase = run.phase_index;
        auto* sink = &row.lemma_violations;

        const CongestionVector dir = congestion_retrying(run.state, a, mu, config);
        run.diag.observe_congestion(dir, sink);

        double delta = rule == MsStepRule::FixedShortStep
                           ? fixed_delta
                           : (dir.l3 > 0.0 ? 1.0 / (config.step_coeff * dir.l3) : 0.5);
        delta = std::min(delta, 0.5);
        bool final_step = false;
        if (mu / (1.0 - delta) >= mu_F) {
            delta = 1.0 - mu / mu_F;
            final_step = true;
        }
        const double mu_next = final_step ? mu_F : mu / (1.0 - delta);

        // Diagnostics ahead of the move: the congestion at the target mu
        // drives the predictor-safety, full-correction and energy checks.
        CongestionVector target;
        double alpha = 0.0;
        double phi_prev = 0.0;
        if (run.diag.on()) {
            target = congestion_retrying(run.state, a, mu_next, config);
            run.diag.observe_congestion(target, sink);
            alpha = delta * target.l3;
            run.diag.record(sink, "predictor_safety", alpha - 1.0 / 16.0, kTolPredictorSafety);

            phi_prev = run.phi_valid ? run.cached_phi
                                     : potential_sum(a, run, anchor, config, sink);

            if (mu > anchor * (1.0 + 1e-12)) {
                const CongestionVector at_anchor =
                    congestion_retrying(run.state, a, anchor, config);
                run.diag.observe_congestion(at_anchor, sink);
                const StabilityViolation sv =
                    check_stability_lemma(at_anchor.rho_hat, dir, anchor, mu);
                run.diag.record(sink, "stability_pointwise", sv.pointwise, kTolStability);
                run.diag.record(sink, "stability_l2", sv.l2, kTolStability);
            }
        }

        const DenseVector x_old = run.state.x;
        for (std::size_t i = 0; i < n; ++i) run.state.x[i] *= 1.0 + delta * dir.rho_hat[i];
        run.state.mu = mu_next;
        check_finite(run.state);

        const CenterOutcome centered = center_recorded(a, run, mu_next, config, sink);
        run.state = centered.state;

        double phi_next = std::numeric_limits<double>::quiet_NaN();
        if (run.diag.on()) {
            DenseVector zeta(n);
            for (std::size_t i = 0; i < n; ++i)
                zeta[i] = run.state.x[i] / x_old[i] - 1.0 - delta * target.rho_hat[i];
            run.diag.record(sink, "full_correction_update", norm2(zeta) - 8.0 * alpha * alpha,
                            kTolFullCorrection);

            phi_next = potential_sum(a, run, anchor, config, sink);
            run.cached_phi = phi_next;
            run.phi_valid = true;
            run.diag.record(sink, "energy_forward",
                            check_energy_lemma_forward(phi_prev, phi_next, target, alpha, n),
                            1e-6 * static_cast<double>(n));
            run.diag.record(sink, "phi_bounds",
                            std::max(phi_next - static_cast<double>(n), -phi_next),
                            kTolPhiBounds);

            const double xmax = norm_inf(x_old);
            double drop = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                drop = std::max(drop, x_old[i] - run.state.x[i]);
            run.diag.record(sink, "coordinate_monotone", drop / std::max(xmax, 1e-300),
                            kTolCoordinateMonotone);
        }

        row.mu = run.state.mu;
        row.delta = delta;
        row.rho_l2 = dir.l2;
        row.rho_l3 = dir.l3;
        row.rho_l4 = dir.l4;
        row.rho_linf = dir.linf;
        row.phi = phi_next;
        row.step_kind = classify_step(dir.l3, n, config.threshold_coeff);
        row.correctors = centered.correctors;
        row.residual = centered.residual;
        run.trace.push_back(std::move(row));
    }
}

}  // namespace mmipm::detail
