#include "adaptkit/lyapunov.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "adaptkit/linalg.hpp"
#include "adaptkit/model_ops.hpp"
#include "adaptkit/spr.hpp"
#include "adaptkit/state_space.hpp"
#include "detail/faddeev.hpp"

namespace adaptkit {

Eigen::MatrixXd solve_lyapunov_raw(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
    const auto n = A.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd M = kronecker(I, A.transpose()) + kronecker(A.transpose(), I);
    const Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(Q.data(), n * n);
    const Eigen::VectorXd p = M.colPivHouseholderQr().solve(-q);
    Eigen::MatrixXd P = Eigen::Map<const Eigen::MatrixXd>(p.data(), n, n);
    return 0.5 * (P + P.transpose());
}

std::optional<LyapunovCertificate> lyapunov_solve(const Eigen::MatrixXd& Am,
                                                  const Eigen::MatrixXd& Q) {
    if (Am.rows() != Am.cols() || Q.rows() != Am.rows() || Q.cols() != Am.cols()) {
        throw std::invalid_argument("lyapunov_solve: dimension mismatch");
    }
    if (!is_symmetric(Q) || !is_positive_definite(Q)) {
        throw std::invalid_argument("lyapunov_solve: Q must be symmetric positive definite");
    }
    if (!is_hurwitz(Am)) return std::nullopt;

    LyapunovCertificate cert;
    cert.P = solve_lyapunov_raw(Am, Q);
    cert.Q = Q;
    cert.residual = (Am.transpose() * cert.P + cert.P * Am + Q).norm();
    if (!is_positive_definite(cert.P)) return std::nullopt;
    return cert;
}

namespace {

// Stable spectral factor p of the even polynomial pi: p has the left
// half-plane roots of pi and p(s) p(-s) = pi(s).
std::optional<Polynomial> stable_spectral_factor(const Polynomial& pi_poly) {
    const Polynomial pi_t = pi_poly.trimmed(1e-11);
    if (pi_t.degree() % 2 != 0) return std::nullopt;
    if (pi_t(0.0) <= 0.0) return std::nullopt;

    std::vector<std::complex<double>> left;
    for (const auto& r : pi_t.roots()) {
        if (std::abs(r.real()) < 1e-9 * (1.0 + std::abs(r.imag()))) {
            return std::nullopt;  // root too close to the imaginary axis
        }
        if (r.real() < 0.0) left.push_back(r);
    }
    if (static_cast<int>(left.size()) * 2 != pi_t.degree()) return std::nullopt;

    Polynomial p0 = Polynomial::from_roots(left, 1e-6);
    const double gamma = std::sqrt(pi_t(0.0)) / p0(0.0);
    return p0 * gamma;
}

}  // namespace

std::optional<LyapunovCertificate> kyl_solve(const Eigen::MatrixXd& A,
                                             const Eigen::VectorXd& B,
                                             const Eigen::VectorXd& C) {
    const auto n = A.rows();
    if (A.cols() != n || B.size() != n || C.size() != n) {
        throw std::invalid_argument("kyl_solve: dimension mismatch");
    }
    if (!is_controllable(A, B) || !is_observable(A, C.transpose())) {
        throw std::invalid_argument("kyl_solve: {A, B, C} must be a minimal realization");
    }

    const StateSpaceLTI ss(A, B, C.transpose());
    const TransferFunction W = ss.to_transfer_function();
    const SprResult spr = spr_check(W);
    if (!spr) return std::nullopt;

    double pole_margin = 1e300;
    for (const auto& p : W.poles()) pole_margin = std::min(pole_margin, -p.real());

    double eps = std::min(spr.epsilon, 0.5 * pole_margin);
    for (int attempt = 0; attempt < 6; ++attempt, eps *= 0.1) {
        const Eigen::MatrixXd A_shift = A + eps * Eigen::MatrixXd::Identity(n, n);
        const Polynomial num_s = W.num().taylor_shift(-eps);
        const Polynomial den_s = W.den().taylor_shift(-eps);
        const Polynomial pi_poly =
            num_s * den_s.reflected() + num_s.reflected() * den_s;

        const auto p = stable_spectral_factor(pi_poly);
        if (!p) continue;

        Eigen::VectorXd q;
        try {
            q = solve_numerator(A_shift, B, *p);
        } catch (const std::invalid_argument&) {
            continue;
        }

        LyapunovCertificate cert;
        cert.P = solve_lyapunov_raw(A_shift, q * q.transpose());
        cert.Q = -(A.transpose() * cert.P + cert.P * A);
        cert.Q = 0.5 * (cert.Q + cert.Q.transpose());
        cert.residual = std::max((cert.P * B - C).norm(),
                                 (A.transpose() * cert.P + cert.P * A + cert.Q).norm());
        if (cert.residual <= 1e-8 && is_positive_definite(cert.P) &&
            is_positive_definite(cert.Q)) {
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace adaptkit
