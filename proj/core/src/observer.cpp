#include "adaptkit/observer.hpp"

#include <stdexcept>

#include "adaptkit/linalg.hpp"

namespace adaptkit {

ObserverState::ObserverState(Eigen::MatrixXd Lambda_, Eigen::VectorXd ell_,
                             Eigen::MatrixXd Gamma_, Eigen::VectorXd theta0,
                             Eigen::VectorXd omega0)
    : omega_hat(std::move(omega0)),
      theta_hat(std::move(theta0)),
      Gamma(std::move(Gamma_)),
      Lambda(std::move(Lambda_)),
      ell(std::move(ell_)) {
    const auto n_ = Lambda.rows();
    if (Lambda.cols() != n_ || ell.size() != n_) {
        throw std::invalid_argument("ObserverState: Lambda/ell dimension mismatch");
    }
    if (!is_hurwitz(Lambda)) {
        throw std::invalid_argument("ObserverState: Lambda must be Hurwitz");
    }
    if (omega_hat.size() != 2 * n_ || theta_hat.size() != 2 * n_) {
        throw std::invalid_argument("ObserverState: states must have dimension 2n");
    }
    if (Gamma.rows() != 2 * n_ || Gamma.cols() != 2 * n_ || !is_symmetric(Gamma) ||
        !is_positive_definite(Gamma)) {
        throw std::invalid_argument("ObserverState: Gamma must be 2n x 2n symmetric PD");
    }
}

ObserverRhs observer_rhs(const ObserverState& state, double u, double y) {
    const auto n = state.n();
    ObserverRhs out;
    out.omega_hat_dot.resize(2 * n);
    out.omega_hat_dot.head(n) = state.Lambda * state.omega_hat.head(n) + state.ell * u;
    out.omega_hat_dot.tail(n) = state.Lambda * state.omega_hat.tail(n) + state.ell * y;
    out.y_hat = state.theta_hat.dot(state.omega_hat);
    out.theta_hat_dot = -state.Gamma * (out.y_hat - y) * state.omega_hat;
    return out;
}

}  // namespace adaptkit
