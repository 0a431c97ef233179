#include "adaptkit/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adaptkit {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
    if (coeffs_.empty()) coeffs_ = {0.0};
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_ = {0.0};
}

Polynomial Polynomial::from_roots(const std::vector<std::complex<double>>& roots,
                                  double tol) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        c.push_back(0.0);
        for (int k = static_cast<int>(c.size()) - 1; k > 0; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] = -r * c[0];
    }
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c[i].imag()) > tol * (1.0 + std::abs(c[i].real()))) {
            throw std::invalid_argument(
                "Polynomial::from_roots: roots are not closed under conjugation");
        }
        out[i] = c[i].real();
    }
    return Polynomial(std::move(out));
}

bool Polynomial::is_zero(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](double c) { return std::abs(c) <= tol; });
}

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::operator()(const std::complex<double>& x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= s;
    return Polynomial(std::move(out));
}

Polynomial operator*(double s, const Polynomial& p) { return p * s; }

Polynomial Polynomial::shifted(int d) const {
    if (d < 0) throw std::invalid_argument("Polynomial::shifted: d must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::taylor_shift(double delta) const {
    // Horner-style synthetic expansion of p(x + delta).
    std::vector<double> out(coeffs_.size(), 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (std::size_t k = out.size() - 1; k > 0; --k) {
            out[k] = out[k] * delta + out[k - 1];
        }
        out[0] = out[0] * delta + *it;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
    std::vector<double> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Polynomial(std::move(out));
}

std::vector<std::complex<double>> Polynomial::roots() const {
    const Polynomial p = trimmed();
    const int n = p.degree();
    if (n < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.coeffs().back();
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)] / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

bool Polynomial::roots_in_open_left_half_plane(double margin) const {
    for (const auto& r : roots()) {
        if (r.real() >= -margin) return false;
    }
    return true;
}

bool Polynomial::roots_in_open_unit_disk(double margin) const {
    for (const auto& r : roots()) {
        if (std::abs(r) >= 1.0 - margin) return false;
    }
    return true;
}

Polynomial Polynomial::trimmed(double tol) const {
    double maxc = 0.0;
    for (double c : coeffs_) maxc = std::max(maxc, std::abs(c));
    std::vector<double> out = coeffs_;
    while (out.size() > 1 && std::abs(out.back()) <= tol * maxc) out.pop_back();
    return Polynomial(std::move(out));
}

}  // namespace adaptkit
