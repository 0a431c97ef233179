#include "adaptkit/high_order_tuner.hpp"

#include <stdexcept>

namespace adaptkit {

HighOrderTunerState::HighOrderTunerState(int num_params, Polynomial alpha_, double mu_)
    : k_prime(Eigen::VectorXd::Zero(num_params)),
      mu(mu_),
      alpha(alpha_.trimmed()) {
    if (num_params < 1) {
        throw std::invalid_argument("HighOrderTunerState: need at least one parameter");
    }
    if (mu < 0.0) {
        throw std::invalid_argument("HighOrderTunerState: mu must be nonnegative");
    }
    const int p = alpha.degree();
    if (p > 0 && !alpha.roots_in_open_left_half_plane(0.0)) {
        throw std::invalid_argument("HighOrderTunerState: alpha must be stable");
    }
    if (alpha.coeff(0) == 0.0) {
        throw std::invalid_argument("HighOrderTunerState: alpha(0) must be nonzero");
    }
    X = Eigen::MatrixXd::Zero(p, num_params);
    if (p > 0) {
        const double lead = alpha.leading_coeff();
        A_f = Eigen::MatrixXd::Zero(p, p);
        for (int i = 0; i + 1 < p; ++i) A_f(i, i + 1) = 1.0;
        for (int j = 0; j < p; ++j) A_f(p - 1, j) = -alpha.coeff(j) / lead;
        b_f = Eigen::VectorXd::Zero(p);
        b_f(p - 1) = 1.0;
        c_f = Eigen::VectorXd::Zero(p);
        c_f(0) = alpha.coeff(0) / lead;  // DC gain alpha(0)/alpha(0) = 1
    }
}

Eigen::VectorXd HighOrderTunerState::k() const {
    if (order() == 0) return k_prime;
    return X.transpose() * c_f;
}

HighOrderTunerRhs hot_rhs(const HighOrderTunerState& state, double e1,
                          const Eigen::VectorXd& omega_prime) {
    const int N = state.num_params();
    if (omega_prime.size() != N) {
        throw std::invalid_argument("hot_rhs: regressor dimension mismatch");
    }
    HighOrderTunerRhs out;
    out.k_prime_dot = -e1 * omega_prime;
    const int p = state.order();
    if (p == 0) {
        out.X_dot.resize(0, N);
        out.k = state.k_prime;
        out.k_dot = out.k_prime_dot;
        return out;
    }
    out.X_dot.resize(p, N);
    out.k.resize(N);
    out.k_dot.resize(N);
    for (int i = 0; i < N; ++i) {
        const double f = 1.0 + state.mu * omega_prime(i) * omega_prime(i);
        out.X_dot.col(i) = (state.A_f * state.X.col(i) + state.b_f * state.k_prime(i)) * f;
        out.k(i) = state.c_f.dot(state.X.col(i));
        out.k_dot(i) = state.c_f.dot(out.X_dot.col(i));
    }
    return out;
}

}  // namespace adaptkit
