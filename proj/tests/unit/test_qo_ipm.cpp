#include <doctest.h>

#include <cmath>

#include "mmipm/central_path.hpp"
#include "mmipm/errors.hpp"
#include "mmipm/instances.hpp"
#include "mmipm/ms_ipm.hpp"
#include "mmipm/oracle.hpp"
#include "mmipm/qo_ipm.hpp"

using namespace mmipm;

TEST_CASE("scalar instance A=[1], b=[2]") {
    // Central path x_mu = 1 + sqrt(1 + mu); optimum x* = 2 with objective -2.
    const auto a = SparseSymMatrix::identity(1);
    const QoResult r = qo_solve(a, {2.0}, 1e-6);
    CHECK(r.final_mu <= 1e-6);
    CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(r.objective <= -2.0 + 1e-6);
    CHECK(r.duality_gap_bound == r.final_mu);
}

TEST_CASE("identity with b = 0 drives the objective to zero") {
    const auto a = SparseSymMatrix::identity(6);
    const QoResult r = qo_solve(a, zeros(6), 1e-8);
    CHECK(r.objective >= 0.0);
    CHECK(r.objective <= 1e-8);
    // Central point is sqrt(mu) * 1, objective n*mu/2.
    for (double v : r.x) CHECK(v == doctest::Approx(std::sqrt(r.final_mu)).epsilon(1e-6));
}

TEST_CASE("duality gap") {
    SUBCASE("scalar central point") {
        const auto a = SparseSymMatrix::identity(1);
        IpmState s;
        s.x = {3.0};
        s.b = {2.0};
        s.mu = 3.0;  // x=3 is 3-central: (3-2)/3 = 1/3 = 1/x
        CHECK(duality_gap(s, a) == doctest::Approx(3.0));
    }
    SUBCASE("diagonal family") {
        const auto a = SparseSymMatrix::identity(5);
        IpmState s;
        s.mu = 0.49;
        s.x = DenseVector(5, std::sqrt(s.mu));
        s.b = zeros(5);
        CHECK(duality_gap(s, a) == doctest::Approx(s.mu * 5.0).epsilon(1e-12));
    }
    SUBCASE("infeasible slack") {
        const auto a = SparseSymMatrix::identity(2);
        IpmState s;
        s.x = {1.0, 1.0};
        s.b = {2.0, 0.0};  // slack (Ax-b) = (-1, 1)
        s.mu = 1.0;
        CHECK_THROWS_AS((void)duality_gap(s, a), DualInfeasibleError);
    }
}

TEST_CASE("line search window on the scalar identity") {
    // At the central point x = sqrt(mu): rho_hat_delta = 1/(2+delta), so
    // g(delta) = delta/(2+delta) lies in [1/32, 1/16] iff delta in [2/31, 2/15].
    const auto a = SparseSymMatrix::identity(1);
    IpmState s;
    s.mu = 4.0;
    s.x = {2.0};
    s.b = {0.0};
    s.phase_mu0 = 2.0;
    const LineSearchResult ls = line_search_delta(s, a, 1.0);
    const double g = ls.delta * ls.rho_hat_delta.l3;
    CHECK(g >= 1.0 / 32.0);
    CHECK(g <= 1.0 / 16.0);
    CHECK(ls.delta >= 2.0 / 31.0 - 1e-12);
    CHECK(ls.delta <= 2.0 / 15.0 + 1e-12);
    CHECK_FALSE(ls.capped);
}

TEST_CASE("line search takes the capped step when the window is out of reach") {
    const auto a = SparseSymMatrix::identity(1);
    IpmState s;
    s.mu = 4.0;
    s.x = {2.0};
    s.b = {0.0};
    const double cap = 0.01;  // g(0.01) = 0.01/2.01 < 1/32
    const LineSearchResult ls = line_search_delta(s, a, cap);
    CHECK(ls.capped);
    CHECK(ls.delta == cap);
}

TEST_CASE("regularize") {
    SUBCASE("scaling mode formula") {
        // lambda_min = 1, n = 4, eps = 0.4 -> gamma = 0.1/4 = 0.025
        const auto a = SparseSymMatrix::identity(4);
        const auto [ap, gamma] = regularize(a, zeros(4), 0.4, RegularizeMode::Scaling);
        CHECK(gamma == doctest::Approx(0.025).epsilon(1e-5));
        CHECK(ap.at(0, 0) == doctest::Approx(1.025).epsilon(1e-5));
    }
    SUBCASE("qo mode formula") {
        // ||b|| = 2, lambda_min = 1, eps = 0.8 -> gamma = 0.1 * 0.25 = 0.025
        const auto a = SparseSymMatrix::identity(1);
        const auto [ap, gamma] = regularize(a, {2.0}, 0.8, RegularizeMode::Qo);
        CHECK(gamma == doctest::Approx(0.025).epsilon(1e-5));
    }
    SUBCASE("eps = 0 is the identity transformation") {
        const auto a = SparseSymMatrix::identity(3);
        const auto [ap, gamma] = regularize(a, zeros(3), 0.0, RegularizeMode::Scaling);
        CHECK(gamma == 0.0);
        CHECK(ap.values() == a.values());
    }
}

TEST_CASE("regularized solves carry back to the original instance") {
    SplitMix64 rng(67);
    for (int t = 0; t < 4; ++t) {
        InstanceSpec spec;
        spec.family = Family::RandomDiagDominant;
        spec.n = 2 + rng.below(10);
        spec.seed = rng.next();
        spec.b_mode = BMode::ScaledRandom;
        spec.b_scale = 2.0;
        const Instance inst = generate(spec);
        const double eps = 1e-3;
        {
            // Scaling: solve the gamma-shifted instance to eps/2; the result
            // scales the original to eps.
            const auto [ap, gamma] = regularize(inst.a, inst.b, eps, RegularizeMode::Scaling);
            const ScalingResult r = ms_solve(ap, eps / 2.0);
            CHECK(scaling_residual(inst.a, r.x_scaled) <= eps);
        }
        {
            // Quadratic: eps/2-suboptimal for the shifted instance implies
            // eps-suboptimal for the original.
            const auto [ap, gamma] = regularize(inst.a, inst.b, eps, RegularizeMode::Qo);
            const QoResult r = qo_solve(ap, inst.b, eps / 2.0);
            const KktSolution ref = qo_bruteforce(inst.a, inst.b);
            const double original_obj = barrier_objective_f(inst.a, inst.b, r.x);
            CHECK(original_obj <= ref.objective + eps);
        }
    }
}

TEST_CASE("qo_solve meets the brute-force optimum") {
    SplitMix64 rng(41);
    for (int t = 0; t < 8; ++t) {
        InstanceSpec spec;
        spec.family = Family::RandomDiagDominant;
        spec.n = 2 + rng.below(9);
        spec.seed = rng.next();
        spec.b_mode = BMode::ScaledRandom;
        spec.b_scale = 2.0;
        const Instance inst = generate(spec);

        const double eps = 1e-6;
        const QoResult r = qo_solve(inst.a, inst.b, eps);
        const KktSolution ref = qo_bruteforce(inst.a, inst.b);
        CHECK(r.objective <= ref.objective + eps);
        CHECK(r.objective >= ref.objective - 1e-9);
        CHECK(min_entry(r.x) > 0.0);
    }
}

TEST_CASE("qo diagnostics stay within tolerance") {
    SolverConfig cfg;
    cfg.diagnostics = DiagnosticsLevel::Soft;
    InstanceSpec spec;
    spec.family = Family::GridLaplacian;
    spec.n = 16;
    spec.gamma = 0.3;
    spec.seed = 2;
    spec.b_mode = BMode::ScaledRandom;
    const Instance inst = generate(spec);
    const QoResult r = qo_solve(inst.a, inst.b, 1e-5, cfg);

    CHECK(r.min_rho_hat_entry >= -1e-10);
    double prev_mu = std::numeric_limits<double>::infinity();
    for (const StepTrace& t : r.trace) {
        CHECK(t.mu < prev_mu);  // mu strictly decreasing
        prev_mu = t.mu;
        CHECK(t.phi > 0.0);
        CHECK(t.phi <= 16.0 + 1e-6);
    }
    for (const auto& [lemma, worst] : r.lemma_worst) {
        INFO(lemma);
        CHECK(worst <= 1e-6 * 16.0);
    }
    CHECK(r.final_mu <= 1e-5 / 16.0);
    // QO phases halve mu exactly.
    const auto phases = summarize_phases(r.trace);
    for (std::size_t p = 0; p + 1 < phases.size(); ++p)
        CHECK(phases[p].mu_end == doctest::Approx(phases[p].mu_start / 2.0).epsilon(1e-12));
}

TEST_CASE("degenerate initialization b = A1 - 1") {
    const auto a = SparseSymMatrix::identity(3);
    DenseVector b = a.matvec(ones(3));
    for (double& v : b) v -= 1.0;  // b == b0, switch distance zero
    const QoResult r = qo_solve(a, b, 1e-4);
    CHECK(r.final_mu <= 1e-4 / 3.0);
}
