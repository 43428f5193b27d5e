#include "mmipm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mmipm/cg.hpp"
#include "mmipm/dense.hpp"

namespace mmipm {

double StepTrace::violation_max() const {
    double m = 0.0;
    for (const LemmaCheck& c : lemma_violations) m = std::max(m, c.magnitude);
    return m;
}

double potential(const IpmState& state, const SparseSymMatrix& a, double mu0,
                 const SolveParams& params) {
    if (!(mu0 > 0.0)) throw std::invalid_argument("potential: mu0 must be positive");
    const DenseVector y = solve_shifted(a, state.x, 1.0 / mu0, ones(a.n()), params);
    double s = 0.0;
    for (double v : y) s += v;
    return s;
}

StepKind classify_step(double rho_l3, std::size_t n, double threshold_coeff) {
    const double threshold = threshold_coeff * std::cbrt(static_cast<double>(n));
    return rho_l3 <= threshold ? StepKind::Long : StepKind::Short;
}

StabilityViolation check_stability_lemma(const DenseVector& rho_hat_mu0,
                                         const CongestionVector& rho_hat_mu, double mu0,
                                         double mu) {
    StabilityViolation v;
    const double ratio = mu0 / mu;
    for (std::size_t i = 0; i < rho_hat_mu0.size(); ++i)
        v.pointwise = std::max(v.pointwise, ratio * rho_hat_mu.rho_hat[i] - rho_hat_mu0[i]);
    v.l2 = std::max(0.0, ratio * norm2(rho_hat_mu0) - rho_hat_mu.l2);
    v.pointwise = std::max(0.0, v.pointwise);
    return v;
}

StabilityViolation check_stability_lemma(const IpmState& state, const SparseSymMatrix& a,
                                         double mu0, double mu, const SolveParams& params) {
    if (!(mu0 < mu)) throw std::invalid_argument("check_stability_lemma: requires mu0 < mu");
    const CongestionVector at_mu = unnormalized_congestion(state, a, mu, params);
    const CongestionVector at_mu0 = unnormalized_congestion(state, a, mu0, params);
    return check_stability_lemma(at_mu0.rho_hat, at_mu, mu0, mu);
}

double check_energy_lemma_forward(double phi_prev, double phi_next,
                                  const CongestionVector& rho_hat_target, double alpha,
                                  std::size_t n) {
    const double n16 = std::pow(static_cast<double>(n), 1.0 / 6.0);
    const double rhs = phi_prev - 8.0 * alpha * n16 * rho_hat_target.l2 +
                       alpha * rho_hat_target.l3 * rho_hat_target.l3 / 2048.0;
    return std::max(0.0, rhs - phi_next);
}

double check_energy_lemma_backward(double phi_prev, double phi_next,
                                   const CongestionVector& rho_hat_target, double alpha,
                                   std::size_t n) {
    const double n16 = std::pow(static_cast<double>(n), 1.0 / 6.0);
    const double rhs = phi_prev + 32.0 * alpha * n16 * rho_hat_target.l2 -
                       0.5 * alpha * rho_hat_target.l3 * rho_hat_target.l3;
    return std::max(0.0, phi_next - rhs);
}

namespace {

double scaled_resolvent_sum(const SparseSymMatrix& a, const DenseVector& scale) {
    // 1' ((I+R) A (I+R) + I)^{-1} 1 with (I+R) = diag(scale), dense.
    Eigen::MatrixXd m = to_dense(a);
    const auto n = static_cast<Eigen::Index>(a.n());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) *= scale[static_cast<std::size_t>(i)] * scale[static_cast<std::size_t>(j)];
    m += Eigen::MatrixXd::Identity(n, n);
    const DenseVector y = dense_spd_solve(m, ones(a.n()));
    double s = 0.0;
    for (double v : y) s += v;
    return s;
}

}  // namespace

double check_general_energy_lemma(const SparseSymMatrix& a_test, const DenseVector& r) {
    const std::size_t n = a_test.n();
    if (r.size() != n) throw std::invalid_argument("dimension mismatch");
    for (double v : r)
        if (v < 0.0) throw std::invalid_argument("forward lemma requires r >= 0");

    Eigen::MatrixXd m = to_dense(a_test) +
                        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n));
    const DenseVector rho = dense_spd_solve(m, ones(n));

    DenseVector scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = 1.0 + r[i];
    const double lhs = scaled_resolvent_sum(a_test, scale);

    double base = 0.0, r_rho = 0.0, r_rho2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        base += rho[i];
        r_rho += r[i] * rho[i];
        r_rho2 += r[i] * rho[i] * rho[i];
    }
    const double damp = std::pow(1.0 / (1.0 + norm_inf(r)), 4.0);
    const double rhs = base - 2.0 * r_rho + 2.0 * damp * r_rho2;
    return std::max(0.0, rhs - lhs);
}

double check_general_energy_lemma_backward(const SparseSymMatrix& a_test, const DenseVector& r) {
    const std::size_t n = a_test.n();
    if (r.size() != n) throw std::invalid_argument("dimension mismatch");
    for (double v : r)
        if (v > 0.0 || v < -0.5)
            throw std::invalid_argument("backward lemma requires -1/2 <= r <= 0");

    Eigen::MatrixXd m = to_dense(a_test) +
                        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n));
    const DenseVector rho = dense_spd_solve(m, ones(n));

    DenseVector scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = 1.0 + r[i];
    const double lhs = scaled_resolvent_sum(a_test, scale);

    double base = 0.0, r_rho = 0.0, r_rho2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        base += rho[i];
        r_rho += r[i] * rho[i];
        r_rho2 += r[i] * rho[i] * rho[i];
    }
    const double rhs = base - 6.0 * r_rho + 1.5 * r_rho2;
    return std::max(0.0, lhs - rhs);
}

void emit_trace(const std::vector<StepTrace>& traces, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_trace: cannot open '" + path + "'");
    out << "iter,phase,mu,delta,rho_l2,rho_l3,rho_l4,rho_linf,phi,step_kind,correctors,"
           "residual,violation_max\n";
    char buf[64];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf << sep;
    };
    for (const StepTrace& t : traces) {
        out << t.iter << ',' << t.phase << ',';
        put(t.mu, ',');
        put(t.delta, ',');
        put(t.rho_l2, ',');
        put(t.rho_l3, ',');
        put(t.rho_l4, ',');
        put(t.rho_linf, ',');
        put(t.phi, ',');
        out << (t.step_kind == StepKind::Long ? "long" : "short") << ',' << t.correctors << ',';
        put(t.residual, ',');
        put(t.violation_max(), '\n');
    }
    if (!out) throw std::runtime_error("emit_trace: write failed for '" + path + "'");
}

std::vector<PhaseReport> summarize_phases(const std::vector<StepTrace>& traces) {
    std::vector<PhaseReport> phases;
    if (traces.empty()) return phases;
    // Trace rows carry the post-step mu; the first phase's start is
    // reconstructed from the first step's delta (mu rises for scaling runs and
    // falls for quadratic ones).
    const bool increasing = traces.back().mu >= traces.front().mu;
    const double mu_first = increasing ? traces.front().mu * (1.0 - traces.front().delta)
                                       : traces.front().mu * (1.0 + traces.front().delta);
    for (const StepTrace& t : traces) {
        if (phases.empty() || phases.back().phase != t.phase) {
            PhaseReport p;
            p.phase = t.phase;
            p.mu_start = phases.empty() ? mu_first : phases.back().mu_end;
            p.phi_start = t.phi;
            phases.push_back(p);
        }
        PhaseReport& p = phases.back();
        p.mu_end = t.mu;
        p.phi_end = t.phi;
        ++p.iterations;
        if (t.step_kind == StepKind::Long)
            ++p.long_steps;
        else
            ++p.short_steps;
    }
    return phases;
}

}  // namespace mmipm
