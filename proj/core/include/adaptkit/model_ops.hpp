#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "adaptkit/polynomial.hpp"
#include "adaptkit/transfer_function.hpp"

namespace adaptkit {

/// Solve C = A*F + z^d * G for F (monic in the constant term, degree d-1)
/// and G (degree deg(A) - 1). A must have constant term 1.
///
/// Throws std::invalid_argument if C's degree exceeds what the fixed (F, G)
/// degrees allow, or if A's constant term is not 1.
struct BezoutSolution {
    Polynomial F;
    Polynomial G;
};
BezoutSolution bezout_solve(const Polynomial& A, const Polynomial& C, int d);

/// Solve the matching conditions Ap + bp theta^T = Am, bp kstar = bm.
/// Returns nullopt when no exact solution exists (least-squares residual
/// above tol).
struct MatchingSolution {
    Eigen::VectorXd theta_star;
    double k_star;
};
std::optional<MatchingSolution> matching_solve(const Eigen::MatrixXd& Ap,
                                               const Eigen::VectorXd& bp,
                                               const Eigen::MatrixXd& Am,
                                               const Eigen::VectorXd& bm,
                                               double tol = 1e-10);

/// Parameters (theta1, theta2) of the 2n-state filter representation
///
///   w1' = Lambda w1 + ell u,   w2' = Lambda w2 + ell y,
///   y   = theta1^T w1 + theta2^T w2
///
/// whose input-output map equals the strictly proper Wp.
struct NonminimalRealization {
    Eigen::VectorXd theta1;
    Eigen::VectorXd theta2;
};
NonminimalRealization nonminimal_realize(const TransferFunction& Wp,
                                         const Eigen::MatrixXd& Lambda,
                                         const Eigen::VectorXd& ell);

/// theta^T adj(sI - A) b as a polynomial in s (degree <= n-1); the numerator
/// of theta^T (sI - A)^{-1} b over det(sI - A).
Polynomial numerator_polynomial(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                const Eigen::VectorXd& theta);

/// Solve for q such that q^T (sI - A)^{-1} b has numerator p.
/// Requires (A, b) controllable and deg(p) <= n-1.
Eigen::VectorXd solve_numerator(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                const Polynomial& p);

}  // namespace adaptkit
