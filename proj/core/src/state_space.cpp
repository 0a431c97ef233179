#include "adaptkit/state_space.hpp"

#include <stdexcept>
#include <vector>

#include "adaptkit/linalg.hpp"
#include "detail/faddeev.hpp"

namespace adaptkit {

StateSpaceLTI::StateSpaceLTI(Eigen::MatrixXd A_, Eigen::MatrixXd B_, Eigen::MatrixXd C_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)) {
    if (A.rows() != A.cols() || A.rows() < 1) {
        throw std::invalid_argument("StateSpaceLTI: A must be square with n >= 1");
    }
    if (B.rows() != A.rows()) {
        throw std::invalid_argument("StateSpaceLTI: B row count must match A");
    }
    if (C.cols() != A.cols()) {
        throw std::invalid_argument("StateSpaceLTI: C column count must match A");
    }
}

TransferFunction StateSpaceLTI::to_transfer_function() const {
    if (B.cols() != 1 || C.rows() != 1) {
        throw std::invalid_argument("to_transfer_function: SISO systems only");
    }
    const auto n = A.rows();
    const detail::Faddeev f = detail::faddeev(A);
    std::vector<double> num(static_cast<std::size_t>(n), 0.0);
    for (Eigen::Index k = 0; k < n; ++k) {
        // M_k carries the s^{n-1-k} coefficient.
        num[static_cast<std::size_t>(n - 1 - k)] = (C * f.M[static_cast<std::size_t>(k)] * B)(0, 0);
    }
    return TransferFunction(Polynomial(num).trimmed(1e-14), Polynomial(f.charpoly));
}

ReferenceModel::ReferenceModel(Eigen::MatrixXd Am_, Eigen::VectorXd bm_,
                               std::optional<TransferFunction> Wm_)
    : Am(std::move(Am_)), bm(std::move(bm_)), Wm(std::move(Wm_)) {
    if (Am.rows() != Am.cols() || Am.rows() < 1) {
        throw std::invalid_argument("ReferenceModel: Am must be square with n >= 1");
    }
    if (bm.size() != Am.rows()) {
        throw std::invalid_argument("ReferenceModel: bm dimension must match Am");
    }
    if (!is_hurwitz(Am)) {
        throw std::invalid_argument("ReferenceModel: Am must be Hurwitz");
    }
}

Polynomial characteristic_polynomial(const Eigen::MatrixXd& A) {
    return Polynomial(detail::faddeev(A).charpoly);
}

}  // namespace adaptkit
