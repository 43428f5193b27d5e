#include "mmipm/verify.hpp"

#include <algorithm>
#include <cmath>

#include "mmipm/dense.hpp"
#include "mmipm/diagnostics.hpp"
#include "mmipm/instances.hpp"
#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

namespace {

SparseSymMatrix random_small_mmatrix(SplitMix64& rng, std::size_t max_n) {
    InstanceSpec spec;
    spec.n = 2 + rng.below(max_n - 1);
    spec.seed = rng.next();
    switch (rng.below(3)) {
        case 0:
            spec.family = Family::GridLaplacian;
            spec.gamma = rng.uniform(0.05, 1.0);
            break;
        case 1:
            spec.family = Family::RandomDiagDominant;
            break;
        default:
            spec.family = Family::Diagonal;
            break;
    }
    return generate(spec).a;
}

double stability_violation_dense(const SparseSymMatrix& a, SplitMix64& rng, bool negate,
                                 double& l2_violation) {
    const std::size_t n = a.n();
    DenseVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(rng.uniform(-2.0, 2.0));
    const double mu0 = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double mu = mu0 * std::pow(10.0, rng.uniform(0.01, 2.0));

    const DenseVector at_mu0 = dense_congestion(a, x, mu0);
    const DenseVector at_mu = dense_congestion(a, x, mu);
    const double ratio = mu0 / mu;
    const double sign = negate ? -1.0 : 1.0;

    double pointwise = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        pointwise = std::max(pointwise, sign * (ratio * at_mu[i] - at_mu0[i]));
    l2_violation = std::max(0.0, sign * (ratio * norm2(at_mu0) - norm2(at_mu)));
    return std::max(0.0, pointwise);
}

}  // namespace

std::vector<LemmaSweepResult> run_verify_sweeps(const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed);

    LemmaSweepResult stab_pw{"stability_pointwise", 0, 0.0};
    LemmaSweepResult stab_l2{"stability_l2", 0, 0.0};
    for (std::size_t t = 0; t < opts.trials; ++t) {
        const SparseSymMatrix a = random_small_mmatrix(rng, opts.max_n);
        double l2v = 0.0;
        const double pw = stability_violation_dense(a, rng, opts.negative_control, l2v);
        stab_pw.max_violation = std::max(stab_pw.max_violation, pw);
        stab_l2.max_violation = std::max(stab_l2.max_violation, l2v);
        ++stab_pw.trials;
        ++stab_l2.trials;
    }

    LemmaSweepResult fwd{"general_energy_forward", 0, 0.0};
    {
        // The deterministic scalar case comes first.
        const SparseSymMatrix id1 = SparseSymMatrix::identity(1);
        fwd.max_violation =
            std::max(fwd.max_violation, check_general_energy_lemma(id1, DenseVector{0.1}));
        ++fwd.trials;
        for (std::size_t t = 1; t < opts.trials; ++t) {
            const SparseSymMatrix a = random_small_mmatrix(rng, opts.max_n);
            DenseVector r(a.n());
            for (double& v : r) v = rng.uniform(0.0, 1.0);
            fwd.max_violation = std::max(fwd.max_violation, check_general_energy_lemma(a, r));
            ++fwd.trials;
        }
    }

    LemmaSweepResult bwd{"general_energy_backward", 0, 0.0};
    for (std::size_t t = 0; t < opts.trials; ++t) {
        const SparseSymMatrix a = random_small_mmatrix(rng, opts.max_n);
        DenseVector r(a.n());
        for (double& v : r) v = rng.uniform(-0.5, 0.0);
        bwd.max_violation = std::max(bwd.max_violation, check_general_energy_lemma_backward(a, r));
        ++bwd.trials;
    }

    return {stab_pw, stab_l2, fwd, bwd};
}

}  // namespace mmipm
