#pragma once

#include <Eigen/Dense>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

// Dense direct-solve path, kept separate from the CG solver so that oracle
// and subject stay independent in tests and verification sweeps.

Eigen::MatrixXd to_dense(const SparseSymMatrix& a);

// Solves M y = r for symmetric positive definite M via Cholesky.
DenseVector dense_spd_solve(const Eigen::MatrixXd& m, const DenseVector& r);

// rho_hat(x, mu) = (XAX/mu + I)^{-1} 1 computed densely.
DenseVector dense_congestion(const SparseSymMatrix& a, const DenseVector& x, double mu);

double dense_lambda_min(const Eigen::MatrixXd& m);
double dense_lambda_max(const Eigen::MatrixXd& m);

Eigen::MatrixXd dense_inverse_spd(const Eigen::MatrixXd& m);

}  // namespace mmipm
