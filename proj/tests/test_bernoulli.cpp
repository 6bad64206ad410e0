#include <doctest.h>

#include <random>

#include "multisect/bernoulli.hpp"

using namespace multisect;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == rational(-1, 2));
    CHECK(bernoulli_number(2) == rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == rational(-1, 30));
    CHECK(bernoulli_number(6) == rational(1, 42));
    CHECK(bernoulli_number(12) == rational(-691, 2730));
    // von Staudt-Clausen: den(B_64) = prod of primes p with (p-1) | 64
    CHECK(bernoulli_number(64).get_den() == 2 * 3 * 5 * 17);  // p-1 | 64: p in {2,3,5,17}
    CHECK_THROWS_AS(bernoulli_number(65), std::domain_error);
    CHECK_THROWS_AS(bernoulli_number(-1), std::domain_error);
}

TEST_CASE("bernoulli polynomial values") {
    CHECK(bernoulli_poly(1, Rational(0)) == rational(-1, 2));  // B_1(x) = x - 1/2
    CHECK(bernoulli_poly(1, rational(1, 2)) == Rational(0));
    CHECK(bernoulli_poly(3, Rational(0)) == Rational(0));
    // B_3(1) = 1 - 3/2 + 1/2 = 0
    CHECK(bernoulli_poly(3, Rational(1)) == Rational(0));
    for (int p = 1; p <= 10; ++p) CHECK(bernoulli_poly(2 * p + 1, Rational(0)) == Rational(0));
}

TEST_CASE("forward difference property B_n(x+1) - B_n(x) = n x^{n-1}") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    int bad = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            Rational x = rational(num(rng), den(rng));
            Rational lhs = bernoulli_poly(n, x + Rational(1)) - bernoulli_poly(n, x);
            Rational rhs = Rational(n) * rational_pow(x, n - 1);
            if (lhs != rhs) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("integer-argument evaluation is exact where the polynomial vanishes") {
    // odd-degree Bernoulli polynomials are 0 at 0 and 1; the double-arithmetic
    // route leaks ~1e-16 there
    for (int p = 1; p <= 5; ++p) {
        CHECK(bernoulli_poly_at_int(2 * p + 1, 0) == 0.0);
        CHECK(bernoulli_poly_at_int(2 * p + 1, 1) == 0.0);
    }
    CHECK(bernoulli_poly_at_int(5, 2) == 5.0);
}

TEST_CASE("double-precision polynomial tracks the exact one") {
    for (int n : {3, 5, 7}) {
        for (double x : {0.0, 0.5, 2.0, -1.5}) {
            long xi = static_cast<long>(x * 2);
            double exact = to_double(bernoulli_poly(n, rational(xi, 2)));
            CHECK(bernoulli_poly_d(n, x) == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}
