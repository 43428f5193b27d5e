#include "mmipm/spectral.hpp"

#include <cmath>
#include <limits>

#include "mmipm/errors.hpp"

namespace mmipm {

namespace {

// All-ones plus a small index-dependent perturbation; never orthogonal to the
// Perron vector of a non-negative matrix.
DenseVector power_start(std::size_t n) {
    DenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
    return v;
}

void normalize(DenseVector& v) {
    const double nrm = norm2(v);
    if (nrm == 0.0) return;
    for (double& x : v) x /= nrm;
}

}  // namespace

SpectralEstimate estimate_lambda_max(const SparseSymMatrix& a, double tol, std::size_t max_iters) {
    const std::size_t n = a.n();
    SpectralEstimate est;
    if (n == 0) { est.converged = true; return est; }

    const double shift = a.max_abs_row_sum();
    DenseVector v = power_start(n);
    normalize(v);
    DenseVector w(n);

    double rayleigh = 0.0;
    for (std::size_t k = 0; k < max_iters; ++k) {
        a.matvec(v, w);
        for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
        rayleigh = dot(v, w);  // v has unit norm
        ++est.iterations;
        // Settled once (v, rayleigh) is a near-eigenpair; a plain Rayleigh
        // stagnation test fires too early when the dominant component of the
        // start vector is small.
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = w[i] - rayleigh * v[i];
            res += d * d;
        }
        if (std::sqrt(res) <= tol * std::max(std::fabs(rayleigh), 1e-300)) {
            est.converged = true;
            break;
        }
        const double wn = norm2(w);
        if (wn == 0.0) { est.converged = true; rayleigh = 0.0; break; }
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
    }
    const double lam = rayleigh - shift;
    est.value = lam + tol * std::fabs(lam);
    return est;
}

MMatrixCertificate certify_mmatrix(const SparseSymMatrix& a, double tol, std::size_t max_iters) {
    const std::size_t n = a.n();
    const auto& rs = a.row_starts();
    const auto& ci = a.col_indices();
    const auto& vals = a.values();

    // Sign pattern is checked exactly on the stored values.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = rs[i]; k < rs[i + 1]; ++k)
            if (ci[k] != i && vals[k] > 0.0)
                throw PositiveOffDiagonalError(i, ci[k], vals[k]);

    MMatrixCertificate cert;
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a.at(i, i));
    cert.s = max_diag + 1.0;

    // Power iteration on C = sI - A, entrywise non-negative, so the positive
    // start vector stays positive and Collatz-Wielandt bounds apply.
    DenseVector v = power_start(n);
    normalize(v);
    DenseVector av(n), cv(n);
    double rayleigh = 0.0;
    double cw_upper = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < max_iters; ++k) {
        a.matvec(v, av);
        double upper = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cv[i] = cert.s * v[i] - av[i];
            upper = std::max(upper, cv[i] / v[i]);
        }
        // Collatz-Wielandt: any positive iterate yields a valid upper bound
        // on rho(C).
        cw_upper = std::min(cw_upper, upper);
        rayleigh = dot(v, cv);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = cv[i] - rayleigh * v[i];
            res += d * d;
        }
        if (std::sqrt(res) <= tol * std::max(std::fabs(rayleigh), 1e-300)) {
            cert.power_converged = true;
            break;
        }
        const double cn = norm2(cv);
        if (cn == 0.0) { cert.power_converged = true; rayleigh = 0.0; break; }
        for (std::size_t i = 0; i < n; ++i) v[i] = cv[i] / cn;
    }

    cert.rho_c_estimate = rayleigh;
    cert.rho_c_upper = cw_upper;
    cert.lambda_min_estimate = cert.s - cert.rho_c_estimate;
    cert.lambda_min_lower = std::max(0.0, cert.s - cert.rho_c_upper);

    if (cert.rho_c_estimate >= cert.s * (1.0 - tol))
        throw NotPositiveDefiniteError("rho(C) estimate " + std::to_string(cert.rho_c_estimate) +
                                       " reaches s = " + std::to_string(cert.s));

    SpectralEstimate lmax = estimate_lambda_max(a, tol, max_iters);
    cert.lambda_max_estimate = lmax.value;
    return cert;
}

}  // namespace mmipm
