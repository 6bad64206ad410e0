#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "multisect/special/products.hpp"
#include "multisect/special/qseries.hpp"
#include "multisect/special/theta.hpp"

using namespace multisect::special;
namespace nb = std::numbers;

TEST_CASE("theta basics") {
    CHECK(theta3(0.0) == 1.0);
    CHECK(theta2(0.0) == 0.0);
    // classical closed form, oracle computable with std::tgamma
    double q = std::exp(-nb::pi);
    double expect = std::pow(nb::pi, 0.25) / std::tgamma(0.75);
    CHECK(theta3(q) == doctest::Approx(expect).epsilon(1e-14));
    // mpmath references at q = 0.3
    CHECK(theta2(0.3) == doctest::Approx(1.614460341194433490816).epsilon(1e-14));
    CHECK(theta3(0.3) == doctest::Approx(1.616239374609513658022).epsilon(1e-14));
    CHECK_THROWS_AS(theta2(1.0), std::domain_error);
    CHECK_THROWS_AS(theta3(-0.1), std::domain_error);
}

TEST_CASE("theta partial sums are monotone in truncation") {
    // both series have positive terms, so longer truncations only grow
    double q = 0.77;
    double prev = 0.0;
    for (int N = 1; N <= 12; ++N) {
        double acc = 0.0;
        for (int n = 1; n <= N; ++n) acc += std::pow(q, double(n) * n);
        double v = 1.0 + 2.0 * acc;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(theta3(q) >= prev);
}

TEST_CASE("q-pochhammer basics") {
    using C = std::complex<double>;
    CHECK(q_pochhammer(C(0.0), C(0.5)) == C(1.0));
    CHECK(q_pochhammer(C(0.7, 0.1), C(0.0)).real() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(q_pochhammer(0.2, 0.2) == doctest::Approx(0.7603327958712324201015).epsilon(1e-14));
    CHECK(std::exp(log_q_pochhammer(0.2, 0.2)) ==
          doctest::Approx(0.7603327958712324201015).epsilon(1e-14));
    CHECK_THROWS_AS(q_pochhammer(C(0.5), C(1.0)), std::domain_error);
}

TEST_CASE("q-pochhammer recurrence (a;q) = (1-a)(aq;q) on a random grid") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ad(-2.0, 2.0), qd(-0.5, 0.5);
    int bad = 0;
    for (int i = 0; i < 300; ++i) {
        std::complex<double> a(ad(rng), ad(rng)), q(qd(rng), qd(rng));
        if (std::abs(q) >= 0.5) continue;
        auto lhs = q_pochhammer(a, q);
        auto rhs = (1.0 - a) * q_pochhammer(a * q, q);
        if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("dieckmann closed form vs elementary products") {
    using C = std::complex<double>;
    // n = 2, b = 1/2: prod (1 + (x/(k+1/2))^2) = cosh(pi x)/(1 + 4 x^2)
    for (double x : {0.3, 0.5, 1.2}) {
        C v = dieckmann_product(C(x), C(0.5), 2);
        double expect = std::cosh(nb::pi * x) / (1.0 + 4.0 * x * x);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(v.imag()) < 1e-12 * expect);
    }
    // n = 2, b -> 0: prod (1 + x^2/k^2) = sinh(pi x)/(pi x)
    {
        double x = 0.8;
        C v = dieckmann_product(C(x), C(1e-9), 2);
        double expect = std::sinh(nb::pi * x) / (nb::pi * x);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-7));
    }
    // n = 3 against a direct tail-corrected product oracle
    {
        double x = 0.3, b = 0.7;
        double logp = 0.0;
        long M = 200000;
        for (long k = 1; k <= M; ++k) logp += std::log1p(std::pow(x / (k + b), 3.0));
        // tail: sum_{k>M} (x/(k+b))^3 ~ x^3/(2 (M+b)^2)
        logp += x * x * x / (2.0 * (M + b) * (M + b));
        C v = dieckmann_product(C(x), C(b), 3);
        CHECK(v.real() == doctest::Approx(std::exp(logp)).epsilon(1e-10));
    }
    // empty-deviation point: every factor is 1
    {
        C v = dieckmann_product(C(0.0), C(1.0), 3);
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(dieckmann_product(C(0.5), C(-2.0), 2), std::domain_error);  // Gamma pole
}

TEST_CASE("lambert series against direct summation") {
    // oracle: plain summation to tail < 1e-18
    auto direct = [](int mu, double q, bool sgn) {
        double acc = 0.0;
        for (int n = 1; n < 100000; ++n) {
            double t = std::pow(double(n), mu) * std::pow(q, n) / (sgn ? 1.0 + std::pow(q, n) : 1.0 - std::pow(q, n));
            acc += t;
            if (t < 1e-18 * acc) break;
        }
        return acc;
    };
    CHECK(lambert_series(1, 0.5, false) == doctest::Approx(direct(1, 0.5, false)).epsilon(1e-14));
    CHECK(lambert_series(1, 0.5, false) == doctest::Approx(2.74403388875948836048).epsilon(1e-13));
    CHECK(lambert_series(1, 0.5, true) == doctest::Approx(1.670190704619604338551).epsilon(1e-13));
    CHECK(lambert_series(2, 0.25, true) == doctest::Approx(direct(2, 0.25, true)).epsilon(1e-14));
    // leading behaviour f(q) ~ q as q -> 0
    CHECK(lambert_series(1, 1e-8, false) == doctest::Approx(1e-8).epsilon(1e-7));
    CHECK_THROWS_AS(lambert_series(1, 1.5, false), std::domain_error);
    CHECK_THROWS_AS(lambert_series(0, 0.5, false), std::domain_error);
}
