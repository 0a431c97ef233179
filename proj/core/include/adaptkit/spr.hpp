#pragma once

#include <Eigen/Dense>
#include <optional>

#include "adaptkit/transfer_function.hpp"

namespace adaptkit {

struct SprResult {
    bool spr = false;
    /// min over the frequency grid of Re[W(jw - epsilon)] (the margin).
    double margin = 0.0;
    /// Shift for which strict positivity was established (0 when !spr).
    double epsilon = 0.0;

    explicit operator bool() const { return spr; }
};

/// Strict positive-realness of a proper rational W: all poles in
/// Re[s] < -epsilon and Re[W(jw - epsilon)] > 0 on a frequency grid, for some
/// epsilon in {1e-6, 1e-4, 1e-2}.
SprResult spr_check(const TransferFunction& W);

/// Relative degree one, all zeros in Re[s] < 0, positive high-frequency gain.
bool hyperminimum_phase_check(const TransferFunction& W);

/// Feedback u = theta^T y rendering the closed loop strictly passive:
/// finds symmetric PD P and theta with
///
///   (A + B theta^T C^T)^T P + P (A + B theta^T C^T) < 0,   P B = C g.
///
/// Feasible iff Z_g(s) = (Cg)^T (sI - A)^{-1} B is hyperminimum-phase.
struct PassificationSolution {
    Eigen::MatrixXd P;
    Eigen::VectorXd theta;
};
std::optional<PassificationSolution> passification_feasible(const Eigen::MatrixXd& A,
                                                            const Eigen::VectorXd& B,
                                                            const Eigen::MatrixXd& C,
                                                            const Eigen::VectorXd& g);

}  // namespace adaptkit
