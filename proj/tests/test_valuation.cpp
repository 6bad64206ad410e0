#include <doctest.h>

#include <random>

#include "multisect/valuation.hpp"

using multisect::valuation;

TEST_CASE("valuation of small cases") {
    auto v = valuation(3, 2);
    CHECK(v.nu == 0);
    CHECK(v.cofactor == 3);

    v = valuation(6, 3);
    CHECK(v.nu == 1);
    CHECK(v.cofactor == 2);

    v = valuation(100, 5);
    CHECK(v.nu == 2);
    CHECK(v.cofactor == 4);

    v = valuation(100, 2);
    CHECK(v.nu == 2);
    CHECK(v.cofactor == 25);

    v = valuation(1, 7);
    CHECK(v.nu == 0);
    CHECK(v.cofactor == 1);
}

TEST_CASE("valuation domain errors") {
    CHECK_THROWS_AS(valuation(0, 2), std::domain_error);
    CHECK_THROWS_AS(valuation(-4, 2), std::domain_error);
    CHECK_THROWS_AS(valuation(5, 1), std::domain_error);
    CHECK_THROWS_AS(valuation(5, 0), std::domain_error);
}

TEST_CASE("valuation round-trip on a million random pairs") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::int64_t> md(1, std::int64_t(1) << 40);
    std::uniform_int_distribution<std::int64_t> bd(2, 11);
    int bad = 0;
    for (int i = 0; i < 1'000'000; ++i) {
        std::int64_t m = md(rng), b = bd(rng);
        auto v = valuation(m, b);
        std::int64_t rebuilt = v.cofactor;
        for (int j = 0; j < v.nu; ++j) rebuilt *= b;
        if (rebuilt != m || v.cofactor % b == 0) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("nu is maximal") {
    // base^(nu+1) must not divide m
    int bad = 0;
    for (std::int64_t b : {2, 3, 5, 7}) {
        for (std::int64_t m = 1; m <= 5000; ++m) {
            auto v = valuation(m, b);
            std::int64_t p = 1;
            for (int j = 0; j <= v.nu; ++j) p *= b;
            if (m % p == 0) ++bad;
        }
    }
    CHECK(bad == 0);
}
