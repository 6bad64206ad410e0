#include <doctest.h>

#include <cmath>
#include <numbers>

#include "multisect/engine.hpp"

using namespace multisect;
namespace nb = std::numbers;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("t-series generating identity for phi(j) = j") {
    GeneratingParams p;
    p.t = 0.35;
    auto [lhs, rhs] = generating_identities([](int j) { return double(j); },
                                            GeneratingVariant::t_series, p, {});
    CHECK(rel(lhs.value, rhs.value) < 1e-12);
    CHECK(lhs.converged);
    CHECK(rhs.converged);
}

TEST_CASE("t-series with unit weight is the plain geometric series") {
    GeneratingParams p;
    p.t = 0.6;
    auto [lhs, rhs] =
        generating_identities([](int) { return 1.0; }, GeneratingVariant::t_series, p, {});
    CHECK(rel(lhs.value, p.t / (1.0 - p.t)) < 1e-12);
    CHECK(rel(rhs.value, p.t / (1.0 - p.t)) < 1e-10);
}

TEST_CASE("dirichlet generating identity for phi(j) = j gives zeta(s)/(2^s - 1)") {
    GeneratingParams p;
    p.s = 2.0;
    auto [lhs, rhs] = generating_identities([](int j) { return double(j); },
                                            GeneratingVariant::dirichlet, p, {});
    double expect = special::riemann_zeta(2.0) / 3.0;
    CHECK(rel(lhs.value, expect) < 1e-12);
    CHECK(rel(rhs.value, expect) < 1e-11);
}

TEST_CASE("chi-series closed form at t = 0.4, s = 2") {
    GeneratingParams p;
    p.t = 0.4;
    p.s = 2.0;
    auto [lhs, rhs] =
        generating_identities(nullptr, GeneratingVariant::chi_series, p, {});
    CHECK(rel(lhs.value, rhs.value) < 1e-11);
}

TEST_CASE("chi-series at t = -1 reduces to the alternating-nu series pi^2/10") {
    GeneratingParams p;
    p.t = -1.0;
    p.s = 2.0;
    auto [lhs, rhs] =
        generating_identities(nullptr, GeneratingVariant::chi_series, p, {});
    CHECK(rel(lhs.value, nb::pi * nb::pi / 10.0) < 1e-11);
    CHECK(rel(rhs.value, nb::pi * nb::pi / 10.0) < 1e-13);
}

TEST_CASE("weighted dirichlet m-side with cosine weights at x = 1/4") {
    // sum_m cos(pi nu2(m)/2)/m^2 = (4^s - 2^s)/(4^s + 1) zeta(s) at s = 2
    auto w = [](int nu) { return std::cos(nb::pi * nu / 2.0); };
    auto r = weighted_dirichlet_sum(w, 2.0, {});
    double expect = (16.0 - 4.0) / 17.0 * special::riemann_zeta(2.0);
    CHECK(rel(r.value, expect) < 1e-11);
}

TEST_CASE("generating identity domain checks") {
    GeneratingParams p;
    p.t = 1.0;
    CHECK_THROWS_AS(
        generating_identities([](int) { return 1.0; }, GeneratingVariant::t_series, p, {}),
        std::domain_error);
    p.t = 0.5;
    p.s = 1.0;
    CHECK_THROWS_AS(
        generating_identities([](int) { return 1.0; }, GeneratingVariant::dirichlet, p, {}),
        std::domain_error);
}
