#pragma once

#include <Eigen/Dense>
#include <optional>

namespace adaptkit {

struct PeReport {
    /// Smallest eigenvalue of the windowed regressor Gram over all scanned
    /// window starts; > 0 iff the record is persistently exciting at level T.
    double alpha = 0.0;
    /// Window length (time units, or samples in discrete mode).
    double T = 0.0;
    /// Directional excitation level: min over unit directions of the best
    /// sub-window mean projection magnitude.
    double epsilon0 = 0.0;
};

struct PeOptions {
    /// Sample spacing for continuous records (trapezoid integration).
    double dt = 1.0;
    /// Plain sums over T samples instead of integrals over time T.
    bool discrete = false;
    /// Window starts are scanned at stride T * stride_fraction.
    double stride_fraction = 0.1;
    /// Sub-window length for the directional level; defaults to T.
    std::optional<double> delta0;
    /// Direction samples used beyond eigenvector/axis candidates (n > 2).
    int direction_samples = 64;
    unsigned long long direction_seed = 0x9e3779b97f4a7c15ULL;
};

/// Persistent-excitation level of a regressor record (rows = samples,
/// columns = components). Throws std::invalid_argument when the window is
/// longer than half the record.
PeReport pe_level(const Eigen::MatrixXd& samples, double T, const PeOptions& opts = {});

/// Required directional excitation for bounded solutions under a disturbance
/// of magnitude vmax: 2 lambda_max(P) / lambda_min(Q) * vmax.
double robustness_margin(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q, double vmax);

}  // namespace adaptkit
