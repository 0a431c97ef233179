#include "adaptkit/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace adaptkit {

bool is_hurwitz(const Eigen::MatrixXd& A, double margin) {
    if (A.rows() != A.cols() || A.rows() == 0) return false;
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
    return (es.eigenvalues().real().array() < -margin).all();
}

bool is_symmetric(const Eigen::MatrixXd& A, double tol) {
    if (A.rows() != A.cols()) return false;
    return (A - A.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + A.cwiseAbs().maxCoeff());
}

bool is_positive_definite(const Eigen::MatrixXd& A, double tol) {
    if (A.rows() != A.cols() || A.rows() == 0) return false;
    return min_eigenvalue_sym(A) > tol;
}

double min_eigenvalue_sym(const Eigen::MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue_sym(const Eigen::MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    const auto n = A.rows();
    Eigen::MatrixXd ctrb(n, n * B.cols());
    Eigen::MatrixXd AkB = B;
    for (Eigen::Index k = 0; k < n; ++k) {
        ctrb.block(0, k * B.cols(), n, B.cols()) = AkB;
        AkB = A * AkB;
    }
    return ctrb;
}

Eigen::MatrixXd observability_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C) {
    const auto n = A.rows();
    Eigen::MatrixXd obsv(n * C.rows(), n);
    Eigen::MatrixXd CAk = C;
    for (Eigen::Index k = 0; k < n; ++k) {
        obsv.block(k * C.rows(), 0, C.rows(), n) = CAk;
        CAk = CAk * A;
    }
    return obsv;
}

bool is_controllable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(controllability_matrix(A, B));
    qr.setThreshold(tol);
    return qr.rank() == A.rows();
}

bool is_observable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C, double tol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(observability_matrix(A, C));
    qr.setThreshold(tol);
    return qr.rank() == A.rows();
}

Eigen::MatrixXd kronecker(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        }
    }
    return K;
}

}  // namespace adaptkit
