#pragma once

#include <Eigen/Dense>

namespace adaptkit {

/// All eigenvalues of A have real part < -margin.
bool is_hurwitz(const Eigen::MatrixXd& A, double margin = 1e-9);

bool is_symmetric(const Eigen::MatrixXd& A, double tol = 1e-9);

/// Symmetric positive definite: smallest eigenvalue of (A + A^T)/2 above tol.
bool is_positive_definite(const Eigen::MatrixXd& A, double tol = 0.0);

double min_eigenvalue_sym(const Eigen::MatrixXd& A);
double max_eigenvalue_sym(const Eigen::MatrixXd& A);

/// Controllability matrix [B, AB, ..., A^{n-1}B].
Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// Observability matrix [C; CA; ...; CA^{n-1}].
Eigen::MatrixXd observability_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C);

bool is_controllable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol = 1e-9);
bool is_observable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C, double tol = 1e-9);

Eigen::MatrixXd kronecker(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

}  // namespace adaptkit
