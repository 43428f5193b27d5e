#include "mmipm/qo_ipm.hpp"

#include <cmath>
#include <functional>

#include "mmipm/errors.hpp"
#include "mmipm/ms_ipm.hpp"
#include "path_engine.hpp"

namespace mmipm {

namespace {

using CongestionObserver = std::function<void(const CongestionVector&)>;

LineSearchResult line_search_impl(const IpmState& state, const SparseSymMatrix& a,
                                  double delta_cap, const SolverConfig& config,
                                  const CongestionObserver& observe) {
    if (!(delta_cap > 0.0)) throw std::invalid_argument("line search: delta_cap must be positive");
    const SolveParams sp = config.solve_params();
    const double lo = config.ls_window_lo;
    const double hi = config.ls_window_hi;

    std::size_t evals = 0;
    auto evaluate = [&](double d) -> CongestionVector {
        if (++evals > 200)
            throw LineSearchFailedError("window not localized within 200 evaluations");
        CongestionVector c = unnormalized_congestion(state, a, state.mu / (1.0 + d), sp);
        if (observe) observe(c);
        return c;
    };

    // Seed from the l3 rule at the current mu, as in the scaling predictor.
    CongestionVector at_mu = unnormalized_congestion(state, a, state.mu, sp);
    if (observe) observe(at_mu);
    double seed = at_mu.l3 > 0.0 ? 1.0 / (config.step_coeff * at_mu.l3) : delta_cap;
    seed = std::min(seed, delta_cap);

    double d = seed;
    CongestionVector cong = evaluate(d);
    double g = d * cong.l3;
    if (g >= lo && g <= hi) return {d, d == delta_cap, std::move(cong), evals};

    if (g > hi) {
        // Can only happen through float noise at the seed; bisect down.
        double lo_d = 0.0, hi_d = d;
        while (true) {
            const double mid = 0.5 * (lo_d + hi_d);
            CongestionVector mc = evaluate(mid);
            const double mg = mid * mc.l3;
            if (mg < lo)
                lo_d = mid;
            else if (mg > hi)
                hi_d = mid;
            else
                return {mid, false, std::move(mc), evals};
        }
    }

    // g < lo: grow geometrically toward the cap.
    while (d < delta_cap) {
        const double nd = std::min(2.0 * d, delta_cap);
        CongestionVector nc = evaluate(nd);
        const double ng = nd * nc.l3;
        if (ng < lo) {
            d = nd;
            cong = std::move(nc);
            continue;
        }
        if (ng <= hi) return {nd, nd == delta_cap, std::move(nc), evals};
        // Bracketed: g(d) < lo < hi < g(nd).
        double lo_d = d, hi_d = nd;
        while (true) {
            const double mid = 0.5 * (lo_d + hi_d);
            CongestionVector mc = evaluate(mid);
            const double mg = mid * mc.l3;
            if (mg < lo)
                lo_d = mid;
            else if (mg > hi)
                hi_d = mid;
            else
                return {mid, false, std::move(mc), evals};
        }
    }
    // The window stays above the cap; the capped step is shorter than the
    // window step and therefore safe.
    return {delta_cap, true, std::move(cong), evals};
}

}  // namespace

LineSearchResult line_search_delta(const IpmState& state, const SparseSymMatrix& a,
                                   double delta_cap, const SolverConfig& config) {
    return line_search_impl(state, a, delta_cap, config, nullptr);
}

double duality_gap(const IpmState& state, const SparseSymMatrix& a) {
    DenseVector slack = a.matvec(state.x);
    for (std::size_t i = 0; i < slack.size(); ++i) {
        slack[i] -= state.b[i];
        if (!(slack[i] > 0.0)) throw DualInfeasibleError(i, slack[i]);
    }
    return dot(slack, state.x);
}

std::pair<SparseSymMatrix, double> regularize(const SparseSymMatrix& a, const DenseVector& b,
                                              double epsilon, RegularizeMode mode) {
    if (epsilon < 0.0) throw std::invalid_argument("regularize: epsilon must be non-negative");
    const MMatrixCertificate cert = certify_mmatrix(a);
    const double lam = cert.lambda_min_estimate;
    double gamma = 0.0;
    if (epsilon > 0.0) {
        if (mode == RegularizeMode::Scaling) {
            gamma = epsilon * lam / (4.0 * static_cast<double>(a.n()));
        } else {
            const double nb = norm2(b);
            // With b = 0 the qo bound is vacuous; fall back to the scaling shift.
            gamma = nb > 0.0 ? (epsilon / 8.0) * (lam / nb) * (lam / nb)
                             : epsilon * lam / (4.0 * static_cast<double>(a.n()));
        }
    }
    return {a.with_diagonal_shift(gamma), gamma};
}

QoResult qo_solve(const SparseSymMatrix& a, const DenseVector& b, double epsilon,
                  const SolverConfig& config) {
    config.validate();
    if (!(epsilon > 0.0)) throw std::invalid_argument("qo_solve: epsilon must be positive");
    const std::size_t n = a.n();
    if (b.size() != n) throw std::invalid_argument("qo_solve: dimension mismatch");
    const MMatrixCertificate cert = certify_mmatrix(a);

    detail::PathRun run;
    run.diag = detail::DiagRuntime(config.diagnostics);

    // Seed: scaling central point at mu large enough that switching the
    // linear term from b0 = A1 - 1 to b leaves ||rho||_2 <= 1/2. The scaling
    // path starts at mu = 1, so mu below 1 is rounded up; the switch bound
    // only improves.
    run.state.x = ones(n);
    run.state.mu = 1.0;
    run.state.phase_mu0 = 1.0;
    DenseVector a1 = a.matvec(run.state.x);
    DenseVector b0(n);
    for (std::size_t i = 0; i < n; ++i) b0[i] = a1[i] - 1.0;
    run.state.b = b0;

    DenseVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = b0[i] - b[i];
    double mu_start = std::max(1.0, 2.0 * norm2(diff));

    // Walk the scaling path until the switch of the linear term is
    // correctable. mu = 2||b0 - b|| alone does not guarantee this (the switch
    // congestion is H^{-1} X (b0 - b) / mu, and X grows only like sqrt(mu)),
    // so keep extending the path until ||rho||_2 <= 1/2.
    while (true) {
        detail::run_ms_path(a, run, mu_start, config, detail::MsStepRule::Adaptive);
        IpmState peek = run.state;
        peek.b = b;
        const double switch_l2 =
            norm2(normalized_congestion(peek, a, peek.mu, config.solve_params()));
        if (switch_l2 <= 0.5) {
            if (run.diag.on())
                run.diag.record(nullptr, "init_switch", switch_l2 - 0.5, detail::kTolInitSwitch);
            break;
        }
        mu_start *= 2.0;
        if (!std::isfinite(mu_start))
            throw NonFiniteIterateError("qo_solve: initialization target unreachable");
    }
    run.trace.clear();  // the returned trace covers the descent only
    run.iter = 0;
    run.phase_index = 0;

    run.state.b = b;
    run.state =
        detail::center_recorded(a, run, run.state.mu, config, nullptr, /*extra_polish=*/1).state;

    double phase_start = run.state.mu;
    run.state.phase_mu0 = phase_start / 2.0;
    run.phi_valid = false;
    double f_prev = std::numeric_limits<double>::quiet_NaN();
    if (run.diag.on()) f_prev = barrier_objective_f(a, b, run.state.x);

    const double mu_exit = epsilon / static_cast<double>(n);
    auto observer = [&run](const CongestionVector& c) { run.diag.observe_congestion(c); };

    while (run.state.mu > mu_exit) {
        if (run.state.mu <= phase_start / 2.0) {
            phase_start = run.state.mu;
            run.state.phase_mu0 = phase_start / 2.0;
            ++run.phase_index;
            run.phi_valid = false;
        }
        const double mu = run.state.mu;
        const double anchor = run.state.phase_mu0;
        const double delta_cap = mu / (phase_start / 2.0) - 1.0;

        StepTrace row;
        row.iter = ++run.iter;
        row.phase = run.phase_index;
        auto* sink = &row.lemma_violations;

        LineSearchResult ls = line_search_impl(run.state, a, delta_cap, config, observer);
        const double alpha = ls.delta * ls.rho_hat_delta.l3;

        double phi_prev = 0.0;
        if (run.diag.on()) {
            run.diag.record(sink, "predictor_safety", alpha - 1.0 / 16.0,
                            detail::kTolPredictorSafety);
            phi_prev = run.phi_valid ? run.cached_phi
                                     : detail::potential_sum(a, run, anchor, config, sink);
        }

        for (std::size_t i = 0; i < n; ++i)
            run.state.x[i] *= 1.0 - ls.delta * ls.rho_hat_delta.rho_hat[i];
        run.state.mu = ls.capped ? phase_start / 2.0 : mu / (1.0 + ls.delta);
        detail::check_finite(run.state);

        // One polish step past the l2 tolerance keeps the duality-gap
        // identity tight even when mu (and hence H^{-1}) makes the l2 metric
        // slack.
        const CenterOutcome centered =
            detail::center_recorded(a, run, run.state.mu, config, sink, /*extra_polish=*/1);
        run.state = centered.state;

        double phi_next = std::numeric_limits<double>::quiet_NaN();
        if (run.diag.on()) {
            phi_next = detail::potential_sum(a, run, anchor, config, sink);
            run.cached_phi = phi_next;
            run.phi_valid = true;
            run.diag.record(sink, "energy_backward",
                            check_energy_lemma_backward(phi_prev, phi_next, ls.rho_hat_delta,
                                                        alpha, n),
                            1e-6 * static_cast<double>(n));
            run.diag.record(sink, "phi_bounds",
                            std::max(phi_next - static_cast<double>(n), -phi_next),
                            detail::kTolPhiBounds);

            const double gap = duality_gap(run.state, a);
            const double mu_n = run.state.mu * static_cast<double>(n);
            run.diag.record(sink, "centered_gap", std::fabs(gap - mu_n) / mu_n,
                            detail::kTolCenteredGap);

            const double f_next = barrier_objective_f(a, b, run.state.x);
            run.diag.record(sink, "objective_monotone",
                            (f_next - f_prev) / std::max(1.0, std::fabs(f_prev)),
                            detail::kTolObjectiveMonotone);
            f_prev = f_next;

            if (cert.lambda_min_lower > 0.0) {
                const double nb = norm2(b);
                const double bound =
                    std::max(2.0 * mu_n / cert.lambda_min_lower,
                             (2.0 * nb / cert.lambda_min_lower) * (2.0 * nb / cert.lambda_min_lower));
                const double xsq = dot(run.state.x, run.state.x);
                run.diag.record(sink, "x_norm_bound", (xsq - bound) / bound,
                                detail::kTolXNormBound);
            }
        }

        row.mu = run.state.mu;
        row.delta = ls.delta;
        row.rho_l2 = ls.rho_hat_delta.l2;
        row.rho_l3 = ls.rho_hat_delta.l3;
        row.rho_l4 = ls.rho_hat_delta.l4;
        row.rho_linf = ls.rho_hat_delta.linf;
        row.phi = phi_next;
        row.step_kind = classify_step(ls.rho_hat_delta.l3, n, config.threshold_coeff);
        row.correctors = centered.correctors;
        row.residual = centered.residual;
        run.trace.push_back(std::move(row));
    }

    QoResult res;
    res.objective = barrier_objective_f(a, b, run.state.x);
    res.final_mu = run.state.mu;
    res.duality_gap_bound = run.state.mu * static_cast<double>(n);
    res.x = std::move(run.state.x);
    res.trace = std::move(run.trace);
    res.certificate = cert;
    res.min_rho_hat_entry = run.diag.min_rho_hat();
    res.max_rho_hat_entry = run.diag.max_rho_hat();
    res.lemma_worst = run.diag.worst();
    return res;
}

}  // namespace mmipm
