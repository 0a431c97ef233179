#pragma once

#include <Eigen/Dense>

#include "adaptkit/polynomial.hpp"

namespace adaptkit {

/// High-order tuner producing a parameter vector k that is p-times
/// differentiable: a first-level estimate k' driven by the raw error is
/// passed componentwise through the unity-DC-gain filter alpha(0)/alpha(s)
/// with a state-dependent time scaling f(w) = 1 + mu w^2.
struct HighOrderTunerState {
    Eigen::VectorXd k_prime;  // first-level estimate, one per component
    Eigen::MatrixXd X;        // p x N filter states (column i belongs to k_i)
    double mu = 1.0;
    Polynomial alpha;  // stable, degree p

    // Controllable-canonical realization of alpha(0)/alpha(s).
    Eigen::MatrixXd A_f;
    Eigen::VectorXd b_f;
    Eigen::VectorXd c_f;

    HighOrderTunerState(int num_params, Polynomial alpha_, double mu_);

    int order() const { return alpha.degree(); }
    int num_params() const { return static_cast<int>(k_prime.size()); }

    /// Filter output k (equals k_prime when the filter order is zero).
    Eigen::VectorXd k() const;
};

struct HighOrderTunerRhs {
    Eigen::VectorXd k_prime_dot;
    Eigen::MatrixXd X_dot;
    Eigen::VectorXd k;
    Eigen::VectorXd k_dot;
};

/// Tuner derivatives for scalar error e1 and filtered regressor omega_prime:
///   k'' = -e1 w',  x_i' = (A x_i + b k_i') f(w_i'),  k_i = c^T x_i.
HighOrderTunerRhs hot_rhs(const HighOrderTunerState& state, double e1,
                          const Eigen::VectorXd& omega_prime);

}  // namespace adaptkit
