#pragma once

#include <Eigen/Dense>
#include <utility>

namespace adaptkit {

/// One perceptron-style update for a +/-1-labeled sample.
///
/// A correctly classified sample (y (theta^T phi + theta0) > 0) leaves the
/// state unchanged (the step size is taken as 0); otherwise
///
///   theta  <- theta  - gamma y phi,   theta0 <- theta0 - gamma y.
///
/// Note the minus sign: this follows the dual half-space convention, so a
/// run drives the state toward a separating hyperplane with inverted
/// orientation relative to the textbook perceptron.
struct PerceptronUpdate {
    Eigen::VectorXd theta;
    double theta0 = 0.0;
    bool updated = false;
};

PerceptronUpdate perceptron_step(const Eigen::VectorXd& theta, double theta0,
                                 const Eigen::VectorXd& phi, int label,
                                 double gamma = 1.0);

}  // namespace adaptkit
