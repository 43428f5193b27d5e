#include "mmipm/cg.hpp"

#include <cmath>
#include <deque>

namespace mmipm {

void SolveParams::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw std::invalid_argument("SolveParams: rel_tol must lie in (0, 1e-2]");
}

std::size_t SolveParams::resolved_max_iters(std::size_t n) const {
    return max_iters > 0 ? max_iters : 20 * n + 200;
}

namespace {

// res = r - H y, recomputed from scratch.
void true_residual(const SparseSymMatrix& a, const DenseVector& x, double c,
                   const DenseVector& r, const DenseVector& y, DenseVector& xy, DenseVector& axy,
                   DenseVector& res) {
    const std::size_t n = a.n();
    for (std::size_t i = 0; i < n; ++i) xy[i] = x[i] * y[i];
    a.matvec(xy, axy);
    for (std::size_t i = 0; i < n; ++i) res[i] = r[i] - (c * x[i] * axy[i] + y[i]);
}

}  // namespace

DenseVector solve_shifted(const SparseSymMatrix& a, const DenseVector& x, double c,
                          const DenseVector& r, const SolveParams& params, SolveReport* report) {
    params.validate();
    const std::size_t n = a.n();
    if (x.size() != n || r.size() != n)
        throw std::invalid_argument("solve_shifted: dimension mismatch");
    if (!(c > 0.0)) throw std::invalid_argument("solve_shifted: c must be positive");
    if (!all_positive(x)) throw std::invalid_argument("solve_shifted: x must be positive");

    SolveReport rep;
    const double rnorm0 = norm2(r);
    if (rnorm0 == 0.0) {
        rep.converged = true;
        if (report) *report = rep;
        return zeros(n);
    }

    const DenseVector diag_a = a.diagonal();
    DenseVector hdiag(n);
    for (std::size_t i = 0; i < n; ++i) hdiag[i] = c * x[i] * x[i] * diag_a[i] + 1.0;

    DenseVector mdiag(n, 1.0);
    if (params.preconditioner == Preconditioner::Jacobi) mdiag = hdiag;

    DenseVector y(n), res(n), z(n), p(n), hp(n), xy(n), axy(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = r[i] / hdiag[i];
    true_residual(a, x, c, r, y, xy, axy, res);

    const std::size_t max_iters = params.resolved_max_iters(n);
    const double target = params.rel_tol * rnorm0;
    std::deque<double> window;  // residual norms for the stagnation check

    auto restart_direction = [&]() {
        for (std::size_t i = 0; i < n; ++i) z[i] = res[i] / mdiag[i];
        p = z;
        return dot(res, z);
    };
    double rz = restart_direction();
    bool failed = false;

    while (true) {
        double rnorm = norm2(res);
        if (rnorm <= target) {
            // Accept only if the true residual agrees; the recurrence may
            // have drifted.
            true_residual(a, x, c, r, y, xy, axy, res);
            rnorm = norm2(res);
            if (rnorm <= target) {
                rep.converged = true;
                rep.final_relative_residual = rnorm / rnorm0;
                break;
            }
            rz = restart_direction();
        }
        rep.final_relative_residual = rnorm / rnorm0;
        if (rep.iterations >= max_iters) { failed = true; break; }
        window.push_back(rnorm);
        if (window.size() > 50) {
            const double old = window.front();
            window.pop_front();
            if (rnorm > old * (1.0 - 1e-16)) { failed = true; break; }  // stagnated
        }

        // hp = H p
        for (std::size_t i = 0; i < n; ++i) xy[i] = x[i] * p[i];
        a.matvec(xy, axy);
        for (std::size_t i = 0; i < n; ++i) hp[i] = c * x[i] * axy[i] + p[i];

        const double php = dot(p, hp);
        if (!(php > 0.0)) { failed = true; break; }  // numerically indefinite
        const double alpha = rz / php;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += alpha * p[i];
            res[i] -= alpha * hp[i];
        }
        ++rep.iterations;

        for (std::size_t i = 0; i < n; ++i) z[i] = res[i] / mdiag[i];
        const double rz_next = dot(res, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    if (report) *report = rep;
    if (failed || !rep.converged) throw NotConvergedError(rep);
    return y;
}

}  // namespace mmipm
