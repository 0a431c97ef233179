#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "adaptkit/polynomial.hpp"

namespace adaptkit {

/// Discrete-time (N)ARMAX plant
///
///   y_k = sum_i a_i y_{k-i} + sum_j b_j u_{k-d-j} + sum_i c_i w_{k-i}
///         + sum_l dstar_l f_l(history)
///
/// a has n entries (i = 1..n), b has m entries (j = 0..m-1, leading b_0 != 0),
/// c has entries for lags 0..|c|-1, and d >= 1 is the input delay in samples.
struct ArmaxPlant {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c{1.0};
    int d = 1;

    /// Optional nonlinear terms: coefficient and a handle evaluated on the
    /// (y, u) histories, most recent sample first.
    struct NonlinearTerm {
        double coeff;
        std::function<double(const std::vector<double>& y_hist,
                             const std::vector<double>& u_hist)> f;
    };
    std::vector<NonlinearTerm> nonlinear_terms;

    ArmaxPlant(std::vector<double> a_, std::vector<double> b_, int d_,
               std::vector<double> c_ = {1.0});

    int n() const { return static_cast<int>(a.size()); }
    int m() const { return static_cast<int>(b.size()); }
    double beta0() const { return b.front(); }

    /// A(z) = 1 - a_1 z - ... - a_n z^n in the delay operator z.
    Polynomial a_poly() const;
    /// B(z) = b_0 + b_1 z + ... in the delay operator z.
    Polynomial b_poly() const;

    /// Zeros of B in the forward shift variable lie strictly inside the unit
    /// circle, i.e. the inverse of B is a stable recursion.
    bool is_minimum_phase(double margin = 0.0) const;
};

/// Parameter domain: axis-aligned box, or an explicit finite candidate list.
struct ParameterSet {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::vector<Eigen::VectorXd> values;

    static ParameterSet box(Eigen::VectorXd lo, Eigen::VectorXd hi);
    static ParameterSet finite(std::vector<Eigen::VectorXd> vals);

    bool is_finite_list() const { return !values.empty(); }
    bool empty() const;
    Eigen::Index dim() const;

    /// Clip onto the box (finite lists: nearest candidate).
    Eigen::VectorXd project(const Eigen::VectorXd& theta) const;
};

enum class Convexity { Convex, Concave, General };

/// Nonlinear plant x' = f(x, theta, u, t) with a compact parameter domain.
struct NonlinearPlant {
    using Dynamics = std::function<Eigen::VectorXd(
        const Eigen::VectorXd& x, const Eigen::VectorXd& theta,
        const Eigen::VectorXd& u, double t)>;

    int state_dim = 0;
    Dynamics dynamics;
    ParameterSet theta_set;
    Convexity convexity = Convexity::General;
};

}  // namespace adaptkit
