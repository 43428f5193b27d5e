#include "mmipm/oracle.hpp"

#include <cmath>
#include <limits>

#include "mmipm/dense.hpp"
#include "mmipm/errors.hpp"

namespace mmipm {

KktSolution qo_bruteforce(const SparseSymMatrix& a, const DenseVector& b) {
    const std::size_t n = a.n();
    if (n > 15) throw TooLargeError("qo_bruteforce: supports only n <= 15");
    if (b.size() != n) throw std::invalid_argument("qo_bruteforce: dimension mismatch");

    const Eigen::MatrixXd ad = to_dense(a);
    const Eigen::VectorXd bd = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(n));
    constexpr double kFeasTol = 1e-12;

    KktSolution best;
    best.objective = std::numeric_limits<double>::infinity();
    bool found = false;

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) support.push_back(i);
        const auto k = static_cast<Eigen::Index>(support.size());

        Eigen::VectorXd xs(k);
        if (k > 0) {
            Eigen::MatrixXd as(k, k);
            Eigen::VectorXd bs(k);
            for (Eigen::Index p = 0; p < k; ++p) {
                bs(p) = bd(static_cast<Eigen::Index>(support[p]));
                for (Eigen::Index q = 0; q < k; ++q)
                    as(p, q) = ad(static_cast<Eigen::Index>(support[p]),
                                  static_cast<Eigen::Index>(support[q]));
            }
            xs = as.partialPivLu().solve(bs);
            if (xs.minCoeff() < -kFeasTol) continue;
        }

        Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        for (Eigen::Index p = 0; p < k; ++p)
            x(static_cast<Eigen::Index>(support[p])) = std::max(0.0, xs(p));
        const Eigen::VectorXd slack = ad * x - bd;
        bool feasible = true;
        for (std::size_t i = 0; i < n && feasible; ++i)
            if (!(mask & (1u << i)) && slack(static_cast<Eigen::Index>(i)) < -kFeasTol)
                feasible = false;
        if (!feasible) continue;

        const double obj = 0.5 * x.dot(ad * x) - bd.dot(x);
        if (obj < best.objective) {
            best.objective = obj;
            best.support = support;
            best.x.assign(x.data(), x.data() + x.size());
            found = true;
        }
    }
    if (!found) throw std::runtime_error("qo_bruteforce: no KKT candidate found");
    return best;
}

}  // namespace mmipm
