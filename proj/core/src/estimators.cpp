#include "adaptkit/estimators.hpp"

#include <stdexcept>

#include "adaptkit/linalg.hpp"

namespace adaptkit {

GradientEstimatorState::GradientEstimatorState(Eigen::VectorXd theta_,
                                               Eigen::MatrixXd gamma_)
    : theta(std::move(theta_)), gamma(std::move(gamma_)) {
    if (gamma.rows() != theta.size() || gamma.cols() != theta.size()) {
        throw std::invalid_argument("GradientEstimatorState: gain dimension mismatch");
    }
    if (!is_symmetric(gamma) || !is_positive_definite(gamma)) {
        throw std::invalid_argument("GradientEstimatorState: gamma must be symmetric PD");
    }
}

GradientEstimatorState::GradientEstimatorState(Eigen::VectorXd theta_, double gamma_scalar)
    : GradientEstimatorState(
          theta_, gamma_scalar * Eigen::MatrixXd::Identity(theta_.size(), theta_.size())) {
    if (gamma_scalar <= 0.0) {
        throw std::invalid_argument("GradientEstimatorState: gamma must be positive");
    }
}

Eigen::VectorXd gradient_rhs(const GradientEstimatorState& state,
                             const Eigen::VectorXd& phi, double y) {
    if (phi.size() != state.theta.size()) {
        throw std::invalid_argument("gradient_rhs: regressor dimension mismatch");
    }
    return -state.gamma * phi * (state.theta.dot(phi) - y);
}

SaEstimatorState::SaEstimatorState(Eigen::VectorXd theta_, double gamma_,
                                   SaGainSchedule schedule_)
    : theta(std::move(theta_)), gamma(gamma_), schedule(schedule_) {
    if (gamma <= 0.0 || gamma > 2.0) {
        throw std::invalid_argument("SaEstimatorState: gamma must lie in (0, 2]");
    }
}

SaEstimatorState sa_step(const SaEstimatorState& state, const Eigen::VectorXd& phi_prev,
                         double y) {
    if (phi_prev.size() != state.theta.size()) {
        throw std::invalid_argument("sa_step: regressor dimension mismatch");
    }
    SaEstimatorState next = state;
    next.step_count = state.step_count + 1;
    double gain = state.gamma;
    if (state.schedule == SaGainSchedule::RobbinsMonro) {
        gain = state.gamma / static_cast<double>(next.step_count);
    }
    const double e = phi_prev.dot(state.theta) - y;
    next.theta = state.theta - (gain / state.r) * phi_prev * e;
    next.r = state.r + phi_prev.squaredNorm();
    return next;
}

RlsEstimatorState::RlsEstimatorState(Eigen::VectorXd theta_, Eigen::MatrixXd Gamma_)
    : theta(std::move(theta_)), Gamma(std::move(Gamma_)) {
    if (Gamma.rows() != theta.size() || Gamma.cols() != theta.size()) {
        throw std::invalid_argument("RlsEstimatorState: gain dimension mismatch");
    }
    if (!is_symmetric(Gamma) || !is_positive_definite(Gamma)) {
        throw std::invalid_argument("RlsEstimatorState: Gamma must be symmetric PD");
    }
}

RlsEstimatorState rls_step(const RlsEstimatorState& state, const Eigen::VectorXd& phi,
                           double y) {
    if (phi.size() != state.theta.size()) {
        throw std::invalid_argument("rls_step: regressor dimension mismatch");
    }
    const Eigen::VectorXd Gphi = state.Gamma * phi;
    const double denom = 1.0 + phi.dot(Gphi);
    const double e = phi.dot(state.theta) - y;

    RlsEstimatorState next = state;
    next.theta = state.theta - Gphi * (e / denom);
    next.Gamma = state.Gamma - (Gphi * Gphi.transpose()) / denom;
    next.Gamma = 0.5 * (next.Gamma + next.Gamma.transpose());
    if (min_eigenvalue_sym(next.Gamma) < 1e-14) {
        throw std::runtime_error("rls_step: degenerate gain (lambda_min < 1e-14)");
    }
    return next;
}

}  // namespace adaptkit
