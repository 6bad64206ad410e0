#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "multisect/special/gamma.hpp"

using namespace multisect::special;
namespace nb = std::numbers;

static double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST_CASE("log_gamma fixed points") {
    CHECK(std::abs(log_gamma(Complex(1.0))) < 1e-14);
    CHECK(std::abs(log_gamma(Complex(2.0))) < 1e-14);
    CHECK(log_gamma(Complex(0.5)).real() == doctest::Approx(0.5 * std::log(nb::pi)).epsilon(1e-14));
    CHECK(log_gamma(Complex(5.0)).real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("|Gamma(1+i)|^2 = pi / sinh(pi)") {
    double expect = nb::pi / std::sinh(nb::pi);
    CHECK(rel(abs_gamma_sq(Complex(1.0, 1.0)), expect) < 1e-13);
}

TEST_CASE("log_gamma against high-precision reference values") {
    // reference: mpmath at 22 digits
    Complex a = log_gamma(Complex(0.5, 2.0));
    CHECK(a.real() == doctest::Approx(-2.222655864053258219071).epsilon(1e-13));
    CHECK(a.imag() == doctest::Approx(-0.592536981977034588934).epsilon(1e-13));
    Complex b = log_gamma(Complex(1.0, 1.0));
    CHECK(b.real() == doctest::Approx(-0.6509231993018563388852).epsilon(1e-13));
    CHECK(b.imag() == doctest::Approx(-0.3016403204675331978875).epsilon(1e-13));
}

TEST_CASE("Gamma recurrence over the right half-plane") {
    int bad = 0;
    for (double re = 0.25; re <= 20.0; re += 0.75) {
        for (double im = -15.0; im <= 15.0; im += 1.5) {
            Complex z(re, im);
            Complex r = std::exp(log_gamma(z + 1.0) - log_gamma(z));
            if (std::abs(r - z) > 1e-12 * std::abs(z)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("reflection formula mod 2 pi i") {
    int bad = 0;
    for (double re : {-3.3, -1.7, -0.4, 0.3}) {
        for (double im : {-2.0, 0.5, 1.0, 3.0}) {
            Complex z(re, im);
            Complex lhs = log_gamma(z) + log_gamma(1.0 - z);
            Complex rhs = std::log(nb::pi / std::sin(nb::pi * z));
            double dre = std::abs(lhs.real() - rhs.real());
            double dim = std::remainder(lhs.imag() - rhs.imag(), 2.0 * nb::pi);
            if (dre > 1e-12 || std::abs(dim) > 1e-12) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("log_gamma pole") {
    CHECK_THROWS_AS(log_gamma(Complex(0.0)), std::domain_error);
    CHECK_THROWS_AS(log_gamma(Complex(-3.0)), std::domain_error);
    CHECK_THROWS_AS(digamma(Complex(-1.0)), std::domain_error);
}

TEST_CASE("digamma reference values") {
    // psi(1) = -gamma
    CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015328606065).epsilon(1e-13));
    // psi(1/2) = -gamma - 2 ln 2
    CHECK(digamma(0.5) ==
          doctest::Approx(-0.5772156649015328606065 - 2.0 * std::log(2.0)).epsilon(1e-13));
    Complex c = digamma(Complex(1.5, 0.5));  // mpmath reference
    CHECK(c.real() == doctest::Approx(0.1318926373545226860532).epsilon(1e-13));
    CHECK(c.imag() == doctest::Approx(0.4406595199775145926589).epsilon(1e-13));
}

TEST_CASE("digamma recurrence psi(z+1) = psi(z) + 1/z") {
    int bad = 0;
    for (double re : {-4.6, -0.3, 0.7, 3.2}) {
        for (double im : {-8.0, -0.9, 0.4, 12.0}) {
            Complex z(re, im);
            Complex d = digamma(z + 1.0) - digamma(z) - 1.0 / z;
            if (std::abs(d) > 1e-12) ++bad;
        }
    }
    CHECK(bad == 0);
}
