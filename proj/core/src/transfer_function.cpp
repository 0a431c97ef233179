#include "adaptkit/transfer_function.hpp"

#include <cmath>
#include <stdexcept>

namespace adaptkit {

TransferFunction::TransferFunction(Polynomial num, Polynomial den, Domain domain)
    : num_(num.trimmed()), den_(den.trimmed()), domain_(domain) {
    if (den_.is_zero()) {
        throw std::invalid_argument("TransferFunction: zero denominator");
    }
    if (num_.degree() > den_.degree()) {
        throw std::invalid_argument("TransferFunction: improper (num degree exceeds den degree)");
    }
}

std::complex<double> TransferFunction::operator()(const std::complex<double>& s) const {
    return num_(s) / den_(s);
}

double TransferFunction::high_frequency_gain() const {
    return num_.leading_coeff() / den_.leading_coeff();
}

bool TransferFunction::coprime(double tol) const {
    if (num_.is_zero() || num_.degree() == 0) return true;
    // Res(num, den) with both normalized monic: product of den over num's roots.
    const Polynomial den_monic = den_ * (1.0 / den_.leading_coeff());
    std::complex<double> res = 1.0;
    for (const auto& r : num_.roots()) res *= den_monic(r);
    return std::abs(res) > tol;
}

}  // namespace adaptkit
