#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mmipm {

struct VerifyOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 32;
    // Test fixture: flips the sign of the stability comparison to prove the
    // harness detects violations. Never set outside tests.
    bool negative_control = false;
};

struct LemmaSweepResult {
    std::string lemma;
    std::size_t trials = 0;
    double max_violation = 0.0;
};

// Randomized property sweeps over small M-matrices, evaluated with dense
// solves only: the congestion stability bound (pointwise and l2 clauses) over
// (A, x, mu0 < mu) triples, and the forward/backward congested-resolvent
// energy bounds over (A, r) pairs, seeded with the deterministic scalar case
// A = I (n = 1), r = 0.1.
std::vector<LemmaSweepResult> run_verify_sweeps(const VerifyOptions& opts);

}  // namespace mmipm
