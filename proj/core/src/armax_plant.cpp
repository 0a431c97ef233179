#include "adaptkit/armax_plant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace adaptkit {

ArmaxPlant::ArmaxPlant(std::vector<double> a_, std::vector<double> b_, int d_,
                       std::vector<double> c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(d_) {
    if (b.empty() || b.front() == 0.0) {
        throw std::invalid_argument("ArmaxPlant: b must have a nonzero leading coefficient");
    }
    if (d < 1) {
        throw std::invalid_argument("ArmaxPlant: delay d must be >= 1");
    }
}

Polynomial ArmaxPlant::a_poly() const {
    std::vector<double> coeffs(a.size() + 1, 0.0);
    coeffs[0] = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) coeffs[i + 1] = -a[i];
    return Polynomial(std::move(coeffs)).trimmed();
}

Polynomial ArmaxPlant::b_poly() const { return Polynomial(b).trimmed(); }

bool ArmaxPlant::is_minimum_phase(double margin) const {
    // Forward-variable zeros are the roots of the reversed coefficient
    // sequence; they govern the stability of the inverse recursion.
    std::vector<double> rev(b.rbegin(), b.rend());
    return Polynomial(std::move(rev)).trimmed().roots_in_open_unit_disk(margin);
}

ParameterSet ParameterSet::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
    if (lo.size() != hi.size() || lo.size() == 0 || (lo.array() > hi.array()).any()) {
        throw std::invalid_argument("ParameterSet::box: require lo <= hi, nonempty");
    }
    ParameterSet s;
    s.lower = std::move(lo);
    s.upper = std::move(hi);
    return s;
}

ParameterSet ParameterSet::finite(std::vector<Eigen::VectorXd> vals) {
    if (vals.empty()) {
        throw std::invalid_argument("ParameterSet::finite: empty candidate list");
    }
    ParameterSet s;
    s.values = std::move(vals);
    return s;
}

bool ParameterSet::empty() const { return values.empty() && lower.size() == 0; }

Eigen::Index ParameterSet::dim() const {
    if (is_finite_list()) return values.front().size();
    return lower.size();
}

Eigen::VectorXd ParameterSet::project(const Eigen::VectorXd& theta) const {
    if (is_finite_list()) {
        double best = std::numeric_limits<double>::infinity();
        Eigen::VectorXd out = values.front();
        for (const auto& v : values) {
            const double dist = (v - theta).norm();
            if (dist < best) {
                best = dist;
                out = v;
            }
        }
        return out;
    }
    return theta.cwiseMax(lower).cwiseMin(upper);
}

}  // namespace adaptkit
