#include <doctest.h>

#include <cmath>
#include <numbers>

#include "multisect/special/zeta.hpp"

using namespace multisect::special;
namespace nb = std::numbers;

TEST_CASE("zeta and eta closed forms") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(nb::pi * nb::pi / 6.0).epsilon(1e-14));
    CHECK(riemann_zeta(4.0) ==
          doctest::Approx(nb::pi * nb::pi * nb::pi * nb::pi / 90.0).epsilon(1e-14));
    CHECK(riemann_zeta(3.0) == doctest::Approx(1.2020569031595942854).epsilon(1e-14));
    CHECK(dirichlet_eta(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(dirichlet_eta(2.0) == doctest::Approx(nb::pi * nb::pi / 12.0).epsilon(1e-14));
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(dirichlet_eta(0.5), std::domain_error);
}

TEST_CASE("eta(s) = (1 - 2^{1-s}) zeta(s), zeta through the independent Hurwitz route") {
    // hurwitz_zeta(s, 1) is an Euler-Maclaurin evaluation, independent of the
    // alternating-series acceleration behind dirichlet_eta.
    for (double s : {2.0, 3.0, 4.0}) {
        double lhs = dirichlet_eta(s);
        double rhs = (1.0 - std::pow(2.0, 1.0 - s)) * hurwitz_zeta(s, 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("hurwitz zeta special points") {
    CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(nb::pi * nb::pi / 6.0).epsilon(1e-13));
    CHECK(hurwitz_zeta(2.0, 0.5) == doctest::Approx(nb::pi * nb::pi / 2.0).epsilon(1e-13));
    // mpmath references
    CHECK(hurwitz_zeta(2.0, 1.0 / 3.0) == doctest::Approx(10.09559712542709408179).epsilon(1e-13));
    CHECK(hurwitz_zeta(3.0, 0.7) == doctest::Approx(3.217496437095461272526).epsilon(1e-13));
    CHECK_THROWS_AS(hurwitz_zeta(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), std::domain_error);
}

TEST_CASE("hurwitz recurrence zeta(s,a) = a^-s + zeta(s,a+1)") {
    int bad = 0;
    for (double s : {1.5, 2.0, 3.7, 11.0, 31.0, 60.0}) {
        for (double a : {0.25, 1.0 / 3.0, 1.0, 2.5, 17.0}) {
            double lhs = hurwitz_zeta(s, a);
            double rhs = std::pow(a, -s) + hurwitz_zeta(s, a + 1.0);
            if (std::abs(lhs - rhs) > 2e-13 * std::abs(lhs)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("large-s Hurwitz values against the elementary sum") {
    // at s = 60 the direct sum needs only a few terms
    double direct = std::pow(1.0 / 3.0, -60.0) + std::pow(4.0 / 3.0, -60.0) +
                    std::pow(7.0 / 3.0, -60.0) + std::pow(10.0 / 3.0, -60.0);
    CHECK(hurwitz_zeta(60.0, 1.0 / 3.0) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("polygamma links to Hurwitz zeta") {
    CHECK(polygamma(1, 1.0) == doctest::Approx(nb::pi * nb::pi / 6.0).epsilon(1e-12));
    CHECK(polygamma(0, 1.0) == doctest::Approx(-0.5772156649015328606065).epsilon(1e-12));
    CHECK(polygamma(1, 1.0 / 3.0) == doctest::Approx(10.09559712542709408179).epsilon(1e-12));
    // cross-implementation identity psi(n,x) = (-1)^{n+1} n! zeta(n+1,x)
    int bad = 0;
    for (int n = 1; n <= 6; ++n) {
        double fact = std::tgamma(n + 1.0);
        for (double x : {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0}) {
            double sign = (n % 2 == 0) ? -1.0 : 1.0;
            double lhs = polygamma(n, x);
            double rhs = sign * fact * hurwitz_zeta(n + 1.0, x);
            if (std::abs(lhs - rhs) > 1e-11 * std::abs(rhs)) ++bad;
        }
    }
    CHECK(bad == 0);
    CHECK_THROWS_AS(polygamma(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(polygamma(-1, 1.0), std::domain_error);
}

TEST_CASE("digamma asymptotic consistency: psi(1,x) by finite differences of psi(0,.)") {
    // central difference of digamma approximates trigamma
    double x = 3.7, h = 1e-5;
    double fd = (polygamma(0, x + h) - polygamma(0, x - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(polygamma(1, x)).epsilon(1e-8));
}
