#include "adaptkit/model_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "adaptkit/linalg.hpp"
#include "detail/faddeev.hpp"

namespace adaptkit {

BezoutSolution bezout_solve(const Polynomial& A_in, const Polynomial& C_in, int d) {
    const Polynomial A = A_in.trimmed();
    const Polynomial C = C_in.trimmed();
    if (d < 1) throw std::invalid_argument("bezout_solve: d must be >= 1");
    if (std::abs(A.coeff(0) - 1.0) > 1e-12) {
        throw std::invalid_argument("bezout_solve: A must have constant term 1");
    }
    if (std::abs(C.coeff(0) - 1.0) > 1e-12) {
        throw std::invalid_argument("bezout_solve: C must have constant term 1");
    }
    const int nA = A.degree();
    const int max_deg = nA + d - 1;
    if (C.degree() > max_deg) {
        throw std::invalid_argument(
            "bezout_solve: C degree exceeds what the fixed (F, G) degrees allow");
    }

    // Unknowns [f_1..f_{d-1}, g_0..g_{nA-1}]; one equation per coefficient
    // of degree 1..nA+d-1 (the constant term is already matched).
    const int nf = d - 1;
    const int ng = nA;
    const int nunk = nf + ng;

    std::vector<double> F_coeffs(static_cast<std::size_t>(d), 0.0);
    F_coeffs[0] = 1.0;
    std::vector<double> G_coeffs(static_cast<std::size_t>(std::max(ng, 1)), 0.0);

    if (nunk > 0) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nunk, nunk);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nunk);
        for (int k = 1; k <= max_deg; ++k) {
            const int row = k - 1;
            for (int j = 1; j <= nf; ++j) {
                M(row, j - 1) += A.coeff(k - j);
            }
            const int gi = k - d;
            if (gi >= 0 && gi < ng) M(row, nf + gi) += 1.0;
            rhs(row) = C.coeff(k) - A.coeff(k);
        }
        const Eigen::VectorXd x = M.colPivHouseholderQr().solve(rhs);
        for (int j = 1; j <= nf; ++j) F_coeffs[static_cast<std::size_t>(j)] = x(j - 1);
        for (int i = 0; i < ng; ++i) G_coeffs[static_cast<std::size_t>(i)] = x(nf + i);
    }

    BezoutSolution sol{Polynomial(F_coeffs), Polynomial(G_coeffs)};
    const Polynomial residual = A * sol.F + sol.G.shifted(d) - C;
    double maxres = 0.0;
    for (double ci : residual.coeffs()) maxres = std::max(maxres, std::abs(ci));
    if (maxres > 1e-12 * std::max(1.0, std::abs(C.leading_coeff()))) {
        throw std::invalid_argument("bezout_solve: no exact solution at the fixed degrees");
    }
    return sol;
}

std::optional<MatchingSolution> matching_solve(const Eigen::MatrixXd& Ap,
                                               const Eigen::VectorXd& bp,
                                               const Eigen::MatrixXd& Am,
                                               const Eigen::VectorXd& bm,
                                               double tol) {
    const auto n = Ap.rows();
    if (Ap.cols() != n || Am.rows() != n || Am.cols() != n || bp.size() != n ||
        bm.size() != n) {
        throw std::invalid_argument("matching_solve: inconsistent dimensions");
    }
    const double bb = bp.squaredNorm();
    if (bb == 0.0) return std::nullopt;

    const Eigen::MatrixXd D = Am - Ap;
    MatchingSolution sol;
    sol.theta_star = D.transpose() * bp / bb;
    sol.k_star = bp.dot(bm) / bb;

    const double res_A = (Ap + bp * sol.theta_star.transpose() - Am).norm();
    const double res_b = (bp * sol.k_star - bm).norm();
    if (res_A > tol || res_b > tol) return std::nullopt;
    return sol;
}

Polynomial numerator_polynomial(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                const Eigen::VectorXd& theta) {
    const auto n = A.rows();
    const detail::Faddeev f = detail::faddeev(A);
    std::vector<double> num(static_cast<std::size_t>(n), 0.0);
    for (Eigen::Index k = 0; k < n; ++k) {
        num[static_cast<std::size_t>(n - 1 - k)] =
            theta.dot(f.M[static_cast<std::size_t>(k)] * b);
    }
    return Polynomial(num);
}

Eigen::VectorXd solve_numerator(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                const Polynomial& p) {
    const auto n = A.rows();
    if (p.degree() > n - 1 && !p.trimmed().is_zero()) {
        if (p.trimmed().degree() > n - 1) {
            throw std::invalid_argument("solve_numerator: numerator degree too high");
        }
    }
    const detail::Faddeev f = detail::faddeev(A);
    Eigen::MatrixXd L(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        L.row(j) = (f.M[static_cast<std::size_t>(n - 1 - j)] * b).transpose();
        rhs(j) = p.coeff(static_cast<int>(j));
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(L);
    qr.setThreshold(1e-12);
    if (qr.rank() < n) {
        throw std::invalid_argument("solve_numerator: (A, b) is not controllable");
    }
    return qr.solve(rhs);
}

NonminimalRealization nonminimal_realize(const TransferFunction& Wp,
                                         const Eigen::MatrixXd& Lambda,
                                         const Eigen::VectorXd& ell) {
    if (!Wp.strictly_proper()) {
        throw std::invalid_argument("nonminimal_realize: Wp must be strictly proper");
    }
    const auto n = Lambda.rows();
    if (Lambda.cols() != n || ell.size() != n) {
        throw std::invalid_argument("nonminimal_realize: Lambda/ell dimension mismatch");
    }
    if (Wp.den().degree() != static_cast<int>(n)) {
        throw std::invalid_argument(
            "nonminimal_realize: filter order must equal the plant order");
    }
    if (!is_hurwitz(Lambda)) {
        throw std::invalid_argument("nonminimal_realize: Lambda must be Hurwitz");
    }
    if (!is_controllable(Lambda, ell)) {
        throw std::invalid_argument("nonminimal_realize: (Lambda, ell) not controllable");
    }

    const double lead = Wp.den().leading_coeff();
    const Polynomial R = Wp.den() * (1.0 / lead);
    const Polynomial Z = Wp.num() * (1.0 / lead);
    const Polynomial lambda = Polynomial(detail::faddeev(Lambda).charpoly);

    NonminimalRealization out;
    out.theta1 = solve_numerator(Lambda, ell, Z);
    out.theta2 = solve_numerator(Lambda, ell, lambda - R);
    return out;
}

}  // namespace adaptkit
