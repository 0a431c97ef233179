#include "adaptkit/spr.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "adaptkit/linalg.hpp"
#include "adaptkit/lyapunov.hpp"
#include "adaptkit/state_space.hpp"

namespace adaptkit {

namespace {

std::vector<double> spr_frequency_grid() {
    std::vector<double> grid;
    grid.push_back(0.0);
    const int npts = 400;
    for (int i = 0; i < npts; ++i) {
        const double ex = -3.0 + 6.0 * static_cast<double>(i) / (npts - 1);
        grid.push_back(std::pow(10.0, ex));
    }
    // High-frequency asymptote probes.
    grid.push_back(1e4);
    grid.push_back(1e5);
    grid.push_back(1e6);
    return grid;
}

}  // namespace

SprResult spr_check(const TransferFunction& W) {
    if (W.num().degree() > W.den().degree()) {
        throw std::invalid_argument("spr_check: improper transfer function");
    }
    static const std::vector<double> grid = spr_frequency_grid();

    const auto poles = W.poles();
    SprResult best;
    for (const double eps : {1e-2, 1e-4, 1e-6}) {
        bool poles_ok = true;
        for (const auto& p : poles) {
            if (p.real() >= -eps) {
                poles_ok = false;
                break;
            }
        }
        if (!poles_ok) continue;

        double min_re = 1e300;
        for (const double w : grid) {
            min_re = std::min(min_re, W(std::complex<double>(-eps, w)).real());
        }
        if (min_re > 0.0) {
            return SprResult{true, min_re, eps};
        }
    }

    // Not SPR: report the real-part margin on the imaginary axis.
    double min_re = 1e300;
    bool stable = true;
    for (const auto& p : poles) stable = stable && (p.real() < 0.0);
    if (stable) {
        for (const double w : grid) {
            min_re = std::min(min_re, W(std::complex<double>(0.0, w)).real());
        }
    } else {
        min_re = -1e300;
    }
    return SprResult{false, min_re, 0.0};
}

bool hyperminimum_phase_check(const TransferFunction& W) {
    if (W.relative_degree() != 1) return false;
    if (W.high_frequency_gain() <= 0.0) return false;
    for (const auto& z : W.zeros()) {
        if (z.real() >= 0.0) return false;
    }
    return true;
}

std::optional<PassificationSolution> passification_feasible(const Eigen::MatrixXd& A,
                                                            const Eigen::VectorXd& B,
                                                            const Eigen::MatrixXd& C,
                                                            const Eigen::VectorXd& g) {
    const auto n = A.rows();
    if (A.cols() != n || B.size() != n || C.rows() != n || g.size() != C.cols()) {
        throw std::invalid_argument("passification_feasible: dimension mismatch");
    }
    const Eigen::VectorXd Cg = C * g;

    TransferFunction Zg = StateSpaceLTI(A, B, Cg.transpose()).to_transfer_function();
    if (!hyperminimum_phase_check(Zg)) return std::nullopt;

    // Output feedback u = -kappa (g^T y) renders the loop SPR for kappa large
    // enough; sweep doubling gains and certify each candidate.
    double kappa = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
        const Eigen::MatrixXd A_theta = A - kappa * B * Cg.transpose();
        if (is_hurwitz(A_theta)) {
            const TransferFunction W_theta =
                StateSpaceLTI(A_theta, B, Cg.transpose()).to_transfer_function();
            if (spr_check(W_theta)) {
                const auto kyl = kyl_solve(A_theta, B, Cg);
                if (kyl) {
                    return PassificationSolution{kyl->P, -kappa * g};
                }
            }
        }
        kappa = (kappa == 0.0) ? 1.0 : kappa * 2.0;
    }
    return std::nullopt;
}

}  // namespace adaptkit
