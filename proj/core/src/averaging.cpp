#include "adaptkit/averaging.hpp"

#include <stdexcept>

#include "adaptkit/linalg.hpp"

namespace adaptkit {

bool averaging_stability_check(const TransferFunction& Wm_bar,
                               const std::vector<SpectralLine>& spectrum) {
    if (spectrum.empty()) {
        throw std::invalid_argument("averaging_stability_check: empty spectrum");
    }
    for (const auto& p : Wm_bar.poles()) {
        if (p.real() >= 0.0) {
            throw std::invalid_argument("averaging_stability_check: Wm_bar must be stable");
        }
    }
    const auto n = spectrum.front().amplitude.size();
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (const auto& line : spectrum) {
        if (line.amplitude.size() != n) {
            throw std::invalid_argument("averaging_stability_check: inconsistent amplitudes");
        }
        const Eigen::MatrixXd outer =
            (line.amplitude * line.amplitude.adjoint()).real();
        const double re_w = Wm_bar(std::complex<double>(0.0, line.frequency)).real();
        gram += outer;
        M += re_w * outer;
    }
    const double scale = gram.cwiseAbs().maxCoeff();
    if (min_eigenvalue_sym(gram) <= 1e-12 * (1.0 + scale)) {
        throw std::invalid_argument(
            "averaging_stability_check: spectrum is not persistently exciting");
    }
    return min_eigenvalue_sym(M) > 0.0;
}

}  // namespace adaptkit
