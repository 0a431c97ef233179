#pragma once

#include <Eigen/Dense>
#include <vector>

namespace adaptkit::detail {

// Faddeev-LeVerrier recursion:
//   adj(sI - A) = sum_k M_k s^{n-1-k},  det(sI - A) = sum_k c_k s^k (monic).
struct Faddeev {
    std::vector<Eigen::MatrixXd> M;  // M_0 = I, ..., M_{n-1}
    std::vector<double> charpoly;    // ascending coefficients, degree n
};

inline Faddeev faddeev(const Eigen::MatrixXd& A) {
    const auto n = A.rows();
    Faddeev out;
    out.charpoly.assign(static_cast<std::size_t>(n) + 1, 0.0);
    out.charpoly[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        out.M.push_back(M);
        const Eigen::MatrixXd AM = A * M;
        const double c = -AM.trace() / static_cast<double>(k);
        out.charpoly[static_cast<std::size_t>(n - k)] = c;
        M = AM + c * Eigen::MatrixXd::Identity(n, n);
    }
    return out;
}

}  // namespace adaptkit::detail
