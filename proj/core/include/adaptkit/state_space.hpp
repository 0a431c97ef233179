#pragma once

#include <Eigen/Dense>
#include <optional>

#include "adaptkit/transfer_function.hpp"

namespace adaptkit {

/// Continuous-time LTI plant x' = Ax + Bu, y = Cx.
struct StateSpaceLTI {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd C;

    StateSpaceLTI(Eigen::MatrixXd A_, Eigen::MatrixXd B_, Eigen::MatrixXd C_);

    Eigen::Index order() const { return A.rows(); }

    /// SISO transfer function C(sI - A)^{-1} B via the Faddeev-LeVerrier
    /// recursion (exact polynomial coefficients, no frequency fitting).
    TransferFunction to_transfer_function() const;
};

/// Reference model x_m' = Am x_m + bm r. Am must be Hurwitz.
struct ReferenceModel {
    Eigen::MatrixXd Am;
    Eigen::VectorXd bm;
    std::optional<TransferFunction> Wm;

    ReferenceModel(Eigen::MatrixXd Am_, Eigen::VectorXd bm_,
                   std::optional<TransferFunction> Wm_ = std::nullopt);

    Eigen::Index order() const { return Am.rows(); }
};

/// Characteristic polynomial det(sI - A), ascending coefficients.
Polynomial characteristic_polynomial(const Eigen::MatrixXd& A);

}  // namespace adaptkit
