#pragma once

#include <Eigen/Dense>

namespace adaptkit {

/// Continuous-time gradient estimator for y = theta*^T phi.
struct GradientEstimatorState {
    Eigen::VectorXd theta;
    Eigen::MatrixXd gamma;  // positive definite gain

    GradientEstimatorState(Eigen::VectorXd theta_, Eigen::MatrixXd gamma_);
    GradientEstimatorState(Eigen::VectorXd theta_, double gamma_scalar);
};

/// theta' = -gamma * phi * (theta^T phi - y), the negative gradient of the
/// squared prediction error.
Eigen::VectorXd gradient_rhs(const GradientEstimatorState& state,
                             const Eigen::VectorXd& phi, double y);

enum class SaGainSchedule {
    Constant,      // gamma_k = gamma
    RobbinsMonro,  // gamma_k = gamma / k
};

/// Normalized stochastic-approximation (projection-type) estimator.
struct SaEstimatorState {
    Eigen::VectorXd theta;
    double r = 1.0;      // normalizer, nondecreasing, >= 1
    double gamma = 1.0;  // gain in (0, 2]
    SaGainSchedule schedule = SaGainSchedule::Constant;
    long long step_count = 0;

    SaEstimatorState(Eigen::VectorXd theta_, double gamma_ = 1.0,
                     SaGainSchedule schedule_ = SaGainSchedule::Constant);
};

/// One SA update with the regressor that produced measurement y:
///   theta <- theta - (gamma_k / r) phi (phi^T theta - y),  r <- r + phi^T phi.
SaEstimatorState sa_step(const SaEstimatorState& state, const Eigen::VectorXd& phi_prev,
                         double y);

/// Recursive least squares state.
struct RlsEstimatorState {
    Eigen::VectorXd theta;
    Eigen::MatrixXd Gamma;  // symmetric PD gain

    RlsEstimatorState(Eigen::VectorXd theta_, Eigen::MatrixXd Gamma_);
};

/// Classical RLS update with the normalized gain
/// Gamma phi / (1 + phi^T Gamma phi); Gamma is re-symmetrized every step.
/// Throws std::runtime_error when Gamma degenerates (lambda_min < 1e-14).
RlsEstimatorState rls_step(const RlsEstimatorState& state, const Eigen::VectorXd& phi,
                           double y);

}  // namespace adaptkit
