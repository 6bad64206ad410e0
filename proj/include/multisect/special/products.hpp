#ifndef MULTISECT_SPECIAL_PRODUCTS_HPP
#define MULTISECT_SPECIAL_PRODUCTS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "multisect/special/gamma.hpp"

namespace multisect::special {

/// Closed form of prod_{k>=1} (1 + (x/(k+b))^n):
///     Gamma(1+b)^n / (b^n + x^n) * prod_{k=1}^{n} 1/Gamma(b - x e^{i pi (2k+1)/n}).
/// Complex roots of unity are principal-value exponentials. Evaluated in the
/// log-Gamma domain.
inline std::complex<double> dieckmann_product(std::complex<double> x, std::complex<double> b, int n) {
    if (n < 1) throw std::domain_error("dieckmann_product: n must be >= 1");
    constexpr double pi = std::numbers::pi;
    std::complex<double> logacc = static_cast<double>(n) * log_gamma(b + 1.0);
    for (int k = 1; k <= n; ++k) {
        std::complex<double> root = std::exp(std::complex<double>(0.0, pi * (2.0 * k + 1.0) / n));
        logacc -= log_gamma(b - x * root);
    }
    std::complex<double> denom = std::pow(b, n) + std::pow(x, n);
    if (std::abs(denom) == 0.0) throw std::domain_error("dieckmann_product: b^n + x^n = 0");
    return std::exp(logacc) / denom;
}

/// Lambert series sum_{n>=1} n^mu q^n / (1 -+ q^n); `signed_form` selects the
/// (1 + q^n) denominator.
inline double lambert_series(int mu, double q, bool signed_form) {
    if (mu < 1) throw std::domain_error("lambert_series: mu must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("lambert_series: q must be in (0,1)");
    double acc = 0.0;
    double qn = 1.0;
    for (int n = 1; n < 10000000; ++n) {
        qn *= q;
        if (qn == 0.0) break;
        double t = std::pow(static_cast<double>(n), mu) * qn / (signed_form ? 1.0 + qn : 1.0 - qn);
        acc += t;
        // terms ~ n^mu q^n: geometric tail bound once q^n dominates the power
        if (t < 1e-17 * acc && n > mu) break;
    }
    return acc;
}

}  // namespace multisect::special

#endif
