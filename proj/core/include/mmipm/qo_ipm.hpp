#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmipm/central_path.hpp"
#include "mmipm/config.hpp"
#include "mmipm/diagnostics.hpp"
#include "mmipm/sparse.hpp"
#include "mmipm/spectral.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

struct QoResult {
    DenseVector x;  // strictly positive approximate minimizer
    double objective = 0.0;  // x'Ax/2 - b'x, recomputed at exit
    double final_mu = 0.0;
    double duality_gap_bound = 0.0;  // final_mu * n
    std::vector<StepTrace> trace;    // descent iterations only
    MMatrixCertificate certificate;
    double min_rho_hat_entry = 0.0;
    double max_rho_hat_entry = 0.0;
    std::map<std::string, double> lemma_worst;
};

// min_{x >= 0} x'Ax/2 - b'x for a symmetric M-matrix A. Initializes by
// running the scaling solver up to mu = max(1, 2||A1 - 1 - b||_2), swaps the
// linear term to b (a correctable switch), then walks mu downward with a
// line-searched step until mu <= epsilon/n, which bounds the primal
// suboptimality by mu*n <= epsilon.
QoResult qo_solve(const SparseSymMatrix& a, const DenseVector& b, double epsilon,
                  const SolverConfig& config = {});

struct LineSearchResult {
    double delta = 0.0;
    bool capped = false;  // delta hit the cap with the window still above it
    CongestionVector rho_hat_delta;
    std::size_t evaluations = 0;
};

// Finds delta > 0 with delta*||rho_hat_delta||_3 inside the configured window
// [1/32, 1/16], where rho_hat_delta = ((1+delta)/mu XAX + I)^{-1} 1, by
// geometric growth from the l3 seed followed by bisection. g(0) = 0 and g is
// continuous and increasing along doubling, so bracketing succeeds; delta is
// capped at delta_cap and the capped step is taken if g stays below the
// window up to it. Requires a centered state.
LineSearchResult line_search_delta(const IpmState& state, const SparseSymMatrix& a,
                                   double delta_cap, const SolverConfig& config = {});

// <Ax - b, x>: the duality gap against the dual point z = Cx of the
// factorized dual; equals mu*n at exactly central points. Requires the dual
// slack Ax - b to be strictly positive (true at centered points).
double duality_gap(const IpmState& state, const SparseSymMatrix& a);

enum class RegularizeMode { Scaling, Qo };

// A' = A + gamma*I with gamma = eps*lambda_min/(4n) (scaling) or
// (eps/8)*(lambda_min/||b||_2)^2 (qo); solving the perturbed instance to
// eps/2 solves the original to eps. Returns the shifted matrix and gamma.
std::pair<SparseSymMatrix, double> regularize(const SparseSymMatrix& a, const DenseVector& b,
                                              double epsilon, RegularizeMode mode);

}  // namespace mmipm
