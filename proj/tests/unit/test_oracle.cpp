#include <doctest.h>

#include <cmath>

#include "mmipm/dense.hpp"
#include "mmipm/errors.hpp"
#include "mmipm/instances.hpp"
#include "mmipm/oracle.hpp"

using namespace mmipm;

TEST_CASE("scalar optimum") {
    const auto a = SparseSymMatrix::identity(1);
    const KktSolution s = qo_bruteforce(a, {2.0});
    REQUIRE(s.support == std::vector<std::size_t>{0});
    CHECK(s.x[0] == doctest::Approx(2.0));
    CHECK(s.objective == doctest::Approx(-2.0));
}

TEST_CASE("all-negative gradient pins the optimum at zero") {
    const auto a = SparseSymMatrix::identity(3);
    const KktSolution s = qo_bruteforce(a, DenseVector(3, -1.0));
    CHECK(s.support.empty());
    CHECK(s.objective == 0.0);
    for (double v : s.x) CHECK(v == 0.0);
}

TEST_CASE("2x2 support enumeration") {
    const auto a =
        SparseSymMatrix::from_lower_triplets(2, {{0, 0, 2.0}, {1, 0, -1.0}, {1, 1, 2.0}});
    const KktSolution s = qo_bruteforce(a, {1.0, 0.0});
    // Full support: x = A^{-1} b = (2/3, 1/3), objective -b'A^{-1}b/2 = -1/3.
    REQUIRE(s.support == std::vector<std::size_t>{0, 1});
    CHECK(s.x[0] == doctest::Approx(2.0 / 3.0));
    CHECK(s.x[1] == doctest::Approx(1.0 / 3.0));
    CHECK(s.objective == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("size guard") {
    const auto a = SparseSymMatrix::identity(16);
    CHECK_THROWS_AS((void)qo_bruteforce(a, zeros(16)), TooLargeError);
}

TEST_CASE("KKT residuals on random instances") {
    SplitMix64 rng(61);
    for (int t = 0; t < 25; ++t) {
        InstanceSpec spec;
        spec.family = Family::RandomDiagDominant;
        spec.n = 2 + rng.below(14);
        spec.seed = rng.next();
        spec.b_mode = BMode::ScaledRandom;
        spec.b_scale = 3.0;
        const Instance inst = generate(spec);
        const KktSolution s = qo_bruteforce(inst.a, inst.b);

        const DenseVector slack = [&] {
            DenseVector ax = inst.a.matvec(s.x);
            for (std::size_t i = 0; i < ax.size(); ++i) ax[i] -= inst.b[i];
            return ax;
        }();
        for (std::size_t i = 0; i < inst.a.n(); ++i) {
            const bool on_support =
                std::find(s.support.begin(), s.support.end(), i) != s.support.end();
            if (on_support) {
                CHECK(std::fabs(slack[i]) <= 1e-9);  // A_SS x_S = b_S
                CHECK(s.x[i] >= 0.0);
            } else {
                CHECK(s.x[i] == 0.0);
                CHECK(slack[i] >= -1e-9);  // complementarity
            }
        }
    }
}
