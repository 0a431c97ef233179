#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace adaptkit {

/// Real polynomial in the shift/differential operator.
///
/// Coefficients are stored ascending (constant term first), so that for the
/// discrete delay operator z, multiplying by z^d simply prepends d zeros.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial zero() { return Polynomial{0.0}; }
    static Polynomial one() { return Polynomial{1.0}; }

    /// Monic polynomial with the given roots (complex roots must come in
    /// conjugate pairs; imaginary residue below `tol` is dropped).
    static Polynomial from_roots(const std::vector<std::complex<double>>& roots,
                                 double tol = 1e-9);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double leading_coeff() const { return coeffs_.back(); }
    bool is_zero(double tol = 0.0) const;

    /// Coefficient of x^k; zero beyond the stored degree.
    double coeff(int k) const;

    double operator()(double x) const;
    std::complex<double> operator()(const std::complex<double>& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double s) const;

    /// Multiply by x^d (prepend d zeros).
    Polynomial shifted(int d) const;

    /// Coefficients of p(x + delta).
    Polynomial taylor_shift(double delta) const;

    /// Coefficients of p(-x).
    Polynomial reflected() const;

    /// Roots via the companion matrix; empty for constants.
    std::vector<std::complex<double>> roots() const;

    /// All roots satisfy Re[r] < -margin.
    bool roots_in_open_left_half_plane(double margin = 0.0) const;

    /// All roots satisfy |r| < 1 - margin.
    bool roots_in_open_unit_disk(double margin = 0.0) const;

    /// Drop trailing coefficients with |c| <= tol * max|c| (keeps degree >= 0).
    Polynomial trimmed(double tol = 1e-12) const;

private:
    std::vector<double> coeffs_;
};

Polynomial operator*(double s, const Polynomial& p);

}  // namespace adaptkit
