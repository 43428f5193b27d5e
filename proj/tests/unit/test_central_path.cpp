#include <doctest.h>

#include <cmath>

#include "mmipm/central_path.hpp"
#include "mmipm/cg.hpp"
#include "mmipm/errors.hpp"
#include "mmipm/instances.hpp"
#include "mmipm/ms_ipm.hpp"
#include "mmipm/sparse.hpp"

using namespace mmipm;

namespace {

IpmState scaling_state(const SparseSymMatrix& a, DenseVector x, double mu) {
    IpmState s;
    s.x = std::move(x);
    s.mu = mu;
    s.phase_mu0 = mu;
    const DenseVector a1 = a.matvec(ones(a.n()));
    s.b.resize(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) s.b[i] = a1[i] - 1.0;
    return s;
}

// 1-d instance A = [2], b = [1]: the mu-central point solves 2x^2 - x = mu.
double central_1d(double mu) { return (1.0 + std::sqrt(1.0 + 8.0 * mu)) / 4.0; }

}  // namespace

TEST_CASE("barrier gradient") {
    SUBCASE("x = 1 is 1-central when b = A1 - 1") {
        const auto a = SparseSymMatrix::identity(3);
        const IpmState s = scaling_state(a, ones(3), 1.0);
        for (double g : barrier_gradient(s, a)) CHECK(g == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("1-d arithmetic") {
        const auto a = SparseSymMatrix::from_lower_triplets(1, {{0, 0, 2.0}});
        IpmState s = scaling_state(a, ones(1), 1.0);
        CHECK(barrier_gradient(s, a)[0] == doctest::Approx(0.0));
        s.mu = 2.0;
        CHECK(barrier_gradient(s, a)[0] == doctest::Approx(-0.5));
    }
}

TEST_CASE("unnormalized congestion") {
    SUBCASE("identity") {
        const auto a = SparseSymMatrix::identity(4);
        const IpmState s = scaling_state(a, ones(4), 1.0);
        const CongestionVector c = unnormalized_congestion(s, a, 1.0);
        for (double v : c.rho_hat) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(c.l2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("2x2 hand solve") {
        const auto a =
            SparseSymMatrix::from_lower_triplets(2, {{0, 0, 2.0}, {1, 0, -1.0}, {1, 1, 2.0}});
        const IpmState s = scaling_state(a, ones(2), 1.0);
        const CongestionVector c = unnormalized_congestion(s, a, 1.0);
        CHECK(c.rho_hat[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(c.rho_hat[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("large mu limit") {
        const auto a = SparseSymMatrix::identity(3);
        const IpmState s = scaling_state(a, ones(3), 1.0);
        const CongestionVector c = unnormalized_congestion(s, a, 1e12);
        for (double v : c.rho_hat) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("entries can exceed 1 when XAX has a negative row sum") {
        // (A+I)^{-1} 1 = (20/19, 13/19) for this certified M-matrix.
        const auto a =
            SparseSymMatrix::from_lower_triplets(2, {{0, 0, 0.6}, {1, 0, -1.0}, {1, 1, 2.0}});
        const IpmState s = scaling_state(a, ones(2), 1.0);
        const CongestionVector c = unnormalized_congestion(s, a, 1.0);
        CHECK(c.rho_hat[0] == doctest::Approx(20.0 / 19.0).epsilon(1e-12));
        CHECK(c.rho_hat[1] == doctest::Approx(13.0 / 19.0).epsilon(1e-12));
        CHECK(c.min >= -1e-10);
        CHECK(c.l2 <= std::sqrt(2.0));  // the l2 bound still holds
    }
}

TEST_CASE("normalized congestion and corrector on the 1-d instance") {
    const auto a = SparseSymMatrix::from_lower_triplets(1, {{0, 0, 2.0}});
    IpmState s = scaling_state(a, ones(1), 2.0);

    // grad = -1/2, hess = 1/mu*2 + 1 = 2, rho = 0.25
    const DenseVector rho = normalized_congestion(s, a, 2.0);
    CHECK(rho[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(centrality_residual(s, a) == doctest::Approx(0.25).epsilon(1e-12));

    const IpmState s2 = corrector_step(s, a);
    CHECK(s2.x[0] == doctest::Approx(1.25).epsilon(1e-12));

    const CenterOutcome out = center(s, a, 1e-10, 40);
    CHECK(out.state.x[0] == doctest::Approx(central_1d(2.0)).epsilon(1e-10));
    CHECK(out.correctors <= 6);
    CHECK(out.residual <= 1e-10);
    CHECK(out.contraction_violation <= 1e-8);
}

TEST_CASE("centered point has zero congestion") {
    const auto a = SparseSymMatrix::from_lower_triplets(1, {{0, 0, 2.0}});
    IpmState s = scaling_state(a, {central_1d(4.0)}, 4.0);
    CHECK(centrality_residual(s, a) <= 1e-9);
    const CenterOutcome out = center(s, a, 1e-10, 40);
    CHECK(out.correctors <= 1);
}

TEST_CASE("corrector precondition violation") {
    // Far from central: mu tiny makes rho huge.
    const auto a = SparseSymMatrix::from_lower_triplets(1, {{0, 0, 2.0}});
    IpmState s = scaling_state(a, {100.0}, 1e-6);
    CHECK_THROWS_AS((void)corrector_step(s, a), CorrectabilityViolatedError);
}

TEST_CASE("max correctors exceeded") {
    const auto a = SparseSymMatrix::from_lower_triplets(1, {{0, 0, 2.0}});
    IpmState s = scaling_state(a, ones(1), 2.0);
    CHECK_THROWS_AS((void)center(s, a, 1e-10, 1), MaxCorrectorsExceededError);
}

TEST_CASE("newton step identity at central points") {
    // rho(x_mu, mu') == delta * rho_hat(x_mu, mu') for mu' = mu/(1-delta).
    SplitMix64 rng(31);
    for (int t = 0; t < 6; ++t) {
        InstanceSpec spec;
        spec.family = Family::RandomDiagDominant;
        spec.n = 2 + rng.below(20);
        spec.seed = rng.next();
        const SparseSymMatrix a = generate(spec).a;
        const double mu = 1.0 + rng.uniform(0.0, 3.0);
        IpmState s = scaling_state(a, ms_solve_to_mu(a, mu).x_scaled, mu);
        s = center(s, a, 1e-12, 40).state;

        for (double delta : {0.01, 0.1}) {
            const double mu_next = mu / (1.0 - delta);
            const DenseVector rho = normalized_congestion(s, a, mu_next);
            const CongestionVector rh = unnormalized_congestion(s, a, mu_next);
            DenseVector diff(rho.size());
            for (std::size_t i = 0; i < rho.size(); ++i)
                diff[i] = rho[i] - delta * rh.rho_hat[i];
            CHECK(norm2(diff) <= 1e-8 * std::sqrt(static_cast<double>(a.n())));
            // ||rho||_2 <= delta sqrt(n)
            CHECK(norm2(rho) <= delta * std::sqrt(static_cast<double>(a.n())) + 1e-9);
        }
    }
}

TEST_CASE("corrector contraction property") {
    SplitMix64 rng(37);
    for (int t = 0; t < 8; ++t) {
        InstanceSpec spec;
        spec.family = Family::GridLaplacian;
        spec.n = 16;
        spec.gamma = 0.5;
        spec.seed = rng.next();
        const SparseSymMatrix a = generate(spec).a;
        IpmState s = scaling_state(a, ones(16), 1.0);
        // Perturb off the path, then measure one corrector step.
        for (auto& v : s.x) v *= std::exp(rng.uniform(-0.05, 0.05));
        const DenseVector rho_before = normalized_congestion(s, a, s.mu);
        const double l4 = norm4(rho_before);
        REQUIRE(l4 <= 0.5);
        const IpmState s2 = corrector_step(s, a);
        const DenseVector rho_after = normalized_congestion(s2, a, s2.mu);
        CHECK(norm2(rho_after) <= l4 * l4 + 1e-8);
    }
}

TEST_CASE("gradient optimality in the Hessian-inverse norm after centering") {
    InstanceSpec spec;
    spec.family = Family::GridLaplacian;
    spec.n = 25;
    spec.gamma = 0.3;
    spec.seed = 5;
    const SparseSymMatrix a = generate(spec).a;
    IpmState s = scaling_state(a, ms_solve_to_mu(a, 3.0).x_scaled, 3.0);
    s = center(s, a, 1e-10, 40).state;

    // ||grad||_{(hess)^{-1}}^2 = (X grad)' H^{-1} (X grad) with H = XAX/mu + I.
    const DenseVector g = barrier_gradient(s, a);
    DenseVector xg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) xg[i] = s.x[i] * g[i];
    const DenseVector y = solve_shifted(a, s.x, 1.0 / s.mu, xg);
    CHECK(std::sqrt(std::fabs(dot(xg, y))) <= 1e-8);
}
