#pragma once

#include <Eigen/Dense>
#include <optional>

namespace adaptkit {

/// Certificate for Am^T P + P Am = -Q with P, Q symmetric positive definite.
struct LyapunovCertificate {
    Eigen::MatrixXd P;
    Eigen::MatrixXd Q;
    double residual = 0.0;
};

/// Solve Am^T P + P Am = -Q for P. Returns nullopt when Am is not Hurwitz
/// (no positive definite solution exists) or Q is not symmetric PD.
std::optional<LyapunovCertificate> lyapunov_solve(const Eigen::MatrixXd& Am,
                                                  const Eigen::MatrixXd& Q);

/// Raw solver for A^T P + P A = -Q without definiteness checks
/// (Kronecker vectorization; intended for small n).
Eigen::MatrixXd solve_lyapunov_raw(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

/// Positive-real matrix pair for the minimal realization {A, B, C} of a
/// strictly proper transfer function: symmetric PD P with
///
///   A^T P + P A = -Q  (Q symmetric PD),   P B = C.
///
/// Returns nullopt iff the realized transfer function is not SPR.
/// Throws std::invalid_argument when {A, B, C} is not minimal.
std::optional<LyapunovCertificate> kyl_solve(const Eigen::MatrixXd& A,
                                             const Eigen::VectorXd& B,
                                             const Eigen::VectorXd& C);

}  // namespace adaptkit
