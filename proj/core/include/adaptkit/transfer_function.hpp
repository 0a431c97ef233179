#pragma once

#include <complex>
#include <vector>

#include "adaptkit/polynomial.hpp"

namespace adaptkit {

enum class Domain { Continuous, Discrete };

/// Proper rational transfer function num/den over s (continuous) or z (discrete).
class TransferFunction {
public:
    TransferFunction(Polynomial num, Polynomial den,
                     Domain domain = Domain::Continuous);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    Domain domain() const { return domain_; }

    std::complex<double> operator()(const std::complex<double>& s) const;

    std::vector<std::complex<double>> poles() const { return den_.roots(); }
    std::vector<std::complex<double>> zeros() const { return num_.roots(); }

    int relative_degree() const { return den_.degree() - num_.degree(); }
    bool strictly_proper() const { return relative_degree() >= 1; }

    /// Ratio of leading coefficients.
    double high_frequency_gain() const;

    /// No (near-)common factors between num and den: |resultant| of the monic
    /// normalizations above tol.
    bool coprime(double tol = 1e-12) const;

private:
    Polynomial num_;
    Polynomial den_;
    Domain domain_;
};

}  // namespace adaptkit
