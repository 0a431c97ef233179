#pragma once

#include <Eigen/Dense>

namespace adaptkit {

/// Adaptive observer on the 2n-dimensional filter representation
///
///   w1' = Lambda w1 + ell u,   w2' = Lambda w2 + ell y,
///   y_hat = theta1_hat^T w1_hat + theta2_hat^T w2_hat,
///   theta_hat' = -Gamma (y_hat - y) w_hat.
struct ObserverState {
    Eigen::VectorXd omega_hat;  // [w1_hat; w2_hat], 2n
    Eigen::VectorXd theta_hat;  // [theta1_hat; theta2_hat], 2n
    Eigen::MatrixXd Gamma;      // 2n x 2n symmetric PD
    Eigen::MatrixXd Lambda;     // n x n Hurwitz
    Eigen::VectorXd ell;

    ObserverState(Eigen::MatrixXd Lambda_, Eigen::VectorXd ell_, Eigen::MatrixXd Gamma_,
                  Eigen::VectorXd theta0, Eigen::VectorXd omega0);

    Eigen::Index n() const { return Lambda.rows(); }
};

struct ObserverRhs {
    Eigen::VectorXd omega_hat_dot;
    Eigen::VectorXd theta_hat_dot;
    double y_hat = 0.0;
};

ObserverRhs observer_rhs(const ObserverState& state, double u, double y);

}  // namespace adaptkit
