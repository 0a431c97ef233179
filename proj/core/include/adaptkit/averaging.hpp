#pragma once

#include <Eigen/Dense>
#include <vector>

#include "adaptkit/transfer_function.hpp"

namespace adaptkit {

/// One line of an almost-periodic regressor spectrum.
struct SpectralLine {
    double frequency = 0.0;
    Eigen::VectorXcd amplitude;
};

/// Averaged-system stability test: true iff every eigenvalue of
///
///   sum_k Re[Wm_bar(i nu_k)] Re[Omega_k Omega_k^H]
///
/// is positive, evaluated over the supplied spectral lines.
/// Throws std::invalid_argument when Wm_bar is unstable or the spectrum does
/// not excite the full space (singular Gram).
bool averaging_stability_check(const TransferFunction& Wm_bar,
                               const std::vector<SpectralLine>& spectrum);

}  // namespace adaptkit
