#include "mmipm/dense.hpp"

#include <stdexcept>

namespace mmipm {

Eigen::MatrixXd to_dense(const SparseSymMatrix& a) {
    const auto n = static_cast<Eigen::Index>(a.n());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    const auto& rs = a.row_starts();
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t k = rs[i]; k < rs[i + 1]; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a.col_indices()[k])) =
                a.values()[k];
    return m;
}

DenseVector dense_spd_solve(const Eigen::MatrixXd& m, const DenseVector& r) {
    if (static_cast<std::size_t>(m.rows()) != r.size())
        throw std::invalid_argument("dense_spd_solve: dimension mismatch");
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(r.data(), m.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("dense_spd_solve: Cholesky factorization failed");
    Eigen::VectorXd y = llt.solve(rhs);
    return DenseVector(y.data(), y.data() + y.size());
}

DenseVector dense_congestion(const SparseSymMatrix& a, const DenseVector& x, double mu) {
    const auto n = static_cast<Eigen::Index>(a.n());
    Eigen::MatrixXd m = to_dense(a);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) *= x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] / mu;
    m += Eigen::MatrixXd::Identity(n, n);
    return dense_spd_solve(m, ones(a.n()));
}

double dense_lambda_min(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double dense_lambda_max(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

Eigen::MatrixXd dense_inverse_spd(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("dense_inverse_spd: Cholesky factorization failed");
    return llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

}  // namespace mmipm
