#ifndef MULTISECT_SPECIAL_GAMMA_HPP
#define MULTISECT_SPECIAL_GAMMA_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace multisect::special {

using Complex = std::complex<double>;

namespace detail {

inline bool is_nonpositive_integer(const Complex& z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

// B_{2k} / (2k (2k-1)) for the Stirling series of log Gamma
inline constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,    1.0 / 156.0,         -3617.0 / 122400.0,
};

// B_{2k} / (2k) for the digamma asymptotic series
inline constexpr double kDigamma[] = {
    1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0,  -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,   1.0 / 12.0,
};

}  // namespace detail

/// Principal-branch log Gamma on the complex plane (Stirling series with
/// argument raising; reflection for Re z < 1/2). About 13-14 significant
/// digits for |z| <= 50. Imaginary part is principal mod 2*pi where the
/// reflection branch is taken.
inline Complex log_gamma(Complex z) {
    constexpr double pi = std::numbers::pi;
    if (detail::is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(Complex(pi)) - std::log(std::sin(pi * z)) - log_gamma(Complex(1.0) - z);
    }
    Complex shift(0.0);
    while (z.real() < 12.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex series(0.0);
    Complex p = inv;
    for (double c : detail::kStirling) {
        series += c * p;
        p *= inv2;
    }
    Complex res = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
    return res + shift;
}

/// |Gamma(z)|^2 = exp(2 Re log Gamma(z)); branch-free.
inline double abs_gamma_sq(const Complex& z) { return std::exp(2.0 * log_gamma(z).real()); }

inline Complex gamma(const Complex& z) { return std::exp(log_gamma(z)); }

/// Digamma on the complex plane, recurrence + asymptotic series.
inline Complex digamma(Complex z) {
    if (detail::is_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at nonpositive integer");
    Complex shift(0.0);
    while (z.real() < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex series(0.0);
    Complex p = inv2;
    for (double c : detail::kDigamma) {
        series += c * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 * inv - series + shift;
}

inline double digamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("digamma: pole");
    return digamma(Complex(x)).real();
}

}  // namespace multisect::special

#endif
