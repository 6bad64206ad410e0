#ifndef MULTISECT_WEIGHT_SCHEME_HPP
#define MULTISECT_WEIGHT_SCHEME_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "multisect/bernoulli.hpp"
#include "multisect/rational.hpp"
#include "multisect/valuation.hpp"

namespace multisect {

/// Exponent/coefficient pair (phi, chi) over the b-adic level j.
/// The cumulative weight of m is phi(nu_b(m)) + sum_{k < nu_b(m)} chi(k).
///
/// Exact families carry rational-valued phi/chi alongside the double-valued
/// ones, which is what enables the integer-arithmetic structural oracle.
struct WeightScheme {
    std::int64_t base = 2;
    std::function<double(int)> phi;
    std::function<double(int)> chi;
    std::function<Rational(int)> phi_exact;  // null for transcendental families
    std::function<Rational(int)> chi_exact;
    // The closed-form cumulative weight the family claims for nu_b(m) = nu
    // (e.g. identically 1 for the telescoping families). Named families set
    // it from the closed form, independently of phi/chi, which is what makes
    // the structural oracle falsifiable. Null: fall back to the phi/chi sum.
    std::function<Rational(int)> claimed_weight_exact;
    std::function<double(int)> claimed_weight;
    std::string family;

    bool exact() const { return static_cast<bool>(phi_exact) && static_cast<bool>(chi_exact); }
};

/// Cumulative weight of m under the scheme, exact form.
inline Rational weight_exact(std::int64_t m, const WeightScheme& s) {
    if (!s.exact())
        throw std::domain_error("weight_exact: scheme '" + s.family + "' is not an exact family");
    int nu = nu_b(m, s.base);
    Rational w = s.phi_exact(nu);
    for (int k = 0; k < nu; ++k) w += s.chi_exact(k);
    return w;
}

/// Cumulative weight of m, double precision.
inline double weight(std::int64_t m, const WeightScheme& s) {
    int nu = nu_b(m, s.base);
    double w = s.phi(nu);
    for (int k = 0; k < nu; ++k) w += s.chi(k);
    return w;
}

namespace detail {
inline void set_claim(WeightScheme& s, Rational (*w)(int)) {
    s.claimed_weight_exact = w;
    auto we = s.claimed_weight_exact;
    s.claimed_weight = [we](int nu) { return to_double(we(nu)); };
}
inline Rational claim_one(int) { return Rational(1); }
inline Rational claim_zero(int) { return Rational(0); }
inline Rational claim_triangle(int nu) { return Rational(nu) * Rational(nu + 1) / Rational(2); }
inline Rational claim_square(int nu) { return Rational(nu) * Rational(nu); }
inline Rational claim_nu_plus_1(int nu) { return Rational(nu + 1); }
}  // namespace detail

/// Closed-form weight the scheme claims for level nu (falls back to the
/// phi/chi cumulative sum when the scheme does not carry a claim).
inline Rational claimed_weight_exact_at(const WeightScheme& s, int nu) {
    if (s.claimed_weight_exact) return s.claimed_weight_exact(nu);
    Rational w = s.phi_exact(nu);
    for (int k = 0; k < nu; ++k) w += s.chi_exact(k);
    return w;
}

inline double claimed_weight_at(const WeightScheme& s, int nu) {
    if (s.claimed_weight) return s.claimed_weight(nu);
    double w = s.phi(nu);
    for (int k = 0; k < nu; ++k) w += s.chi(k);
    return w;
}

// ---- named families -------------------------------------------------------

/// phi = 2^j, chi = -2^j: the original 2^j identity, weight == 1.
inline WeightScheme scheme_two_pow(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [](int j) { return std::ldexp(1.0, j); };
    s.chi = [](int j) { return -std::ldexp(1.0, j); };
    s.phi_exact = [](int j) -> Rational { return rational_pow(Rational(2), j); };
    s.chi_exact = [](int j) -> Rational { return -rational_pow(Rational(2), j); };
    detail::set_claim(s, detail::claim_one);
    s.family = "two-pow";
    return s;
}

/// phi = q^j, chi = (1-q) q^j: the q-parameterized dissection, weight == 1.
inline WeightScheme scheme_q_power(const Rational& q, std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    double qd = to_double(q);
    s.phi = [qd](int j) { return std::pow(qd, j); };
    s.chi = [qd](int j) { return (1.0 - qd) * std::pow(qd, j); };
    s.phi_exact = [q](int j) -> Rational { return rational_pow(q, j); };
    s.chi_exact = [q](int j) -> Rational { return (Rational(1) - q) * rational_pow(q, j); };
    detail::set_claim(s, detail::claim_one);
    s.family = "q-power(q=" + to_string(q) + ")";
    return s;
}

/// phi = chi = j, weight = nu(nu+1)/2.
inline WeightScheme scheme_phi_chi_j(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = s.chi = [](int j) { return static_cast<double>(j); };
    s.phi_exact = s.chi_exact = [](int j) -> Rational { return Rational(j); };
    detail::set_claim(s, detail::claim_triangle);
    s.family = "phi=chi=j";
    return s;
}

/// phi = j, chi = 2j, weight = nu^2.
inline WeightScheme scheme_j_2j(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [](int j) { return static_cast<double>(j); };
    s.chi = [](int j) { return 2.0 * j; };
    s.phi_exact = [](int j) -> Rational { return Rational(j); };
    s.chi_exact = [](int j) -> Rational { return Rational(2 * j); };
    detail::set_claim(s, detail::claim_square);
    s.family = "phi=j,chi=2j";
    return s;
}

/// phi = chi = 1, weight = nu + 1.
inline WeightScheme scheme_ones(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = s.chi = [](int) { return 1.0; };
    s.phi_exact = s.chi_exact = [](int) -> Rational { return Rational(1); };
    detail::set_claim(s, detail::claim_nu_plus_1);
    s.family = "phi=chi=1";
    return s;
}

/// phi = -j^2 + j + 1, chi = 2j, weight == 1.
inline WeightScheme scheme_ex312(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [](int j) { return static_cast<double>(-j * j + j + 1); };
    s.chi = [](int j) { return 2.0 * j; };
    s.phi_exact = [](int j) -> Rational { return Rational(-j * j + j + 1); };
    s.chi_exact = [](int j) -> Rational { return Rational(2 * j); };
    detail::set_claim(s, detail::claim_one);
    s.family = "phi=-j^2+j+1,chi=2j";
    return s;
}

/// phi = 1/(j+1), chi = 1/((j+1)(j+2)), weight == 1 (telescoping).
inline WeightScheme scheme_telescoping(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [](int j) { return 1.0 / (j + 1); };
    s.chi = [](int j) { return 1.0 / ((j + 1.0) * (j + 2.0)); };
    s.phi_exact = [](int j) -> Rational { return rational(1, j + 1); };
    s.chi_exact = [](int j) -> Rational { return rational(1, static_cast<long>(j + 1) * (j + 2)); };
    detail::set_claim(s, detail::claim_one);
    s.family = "telescoping-1/(j+1)";
    return s;
}

/// phi = 1 - j(j+3)/(4(j+1)(j+2)), chi = 1/((j+1)(j+2)(j+3)), weight == 1.
inline WeightScheme scheme_fourth_choice(std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [](int j) { return 1.0 - j * (j + 3.0) / (4.0 * (j + 1.0) * (j + 2.0)); };
    s.chi = [](int j) { return 1.0 / ((j + 1.0) * (j + 2.0) * (j + 3.0)); };
    s.phi_exact = [](int j) -> Rational {
        return Rational(1) - Rational(j * (j + 3)) / Rational(4L * (j + 1) * (j + 2));
    };
    s.chi_exact = [](int j) -> Rational { return rational(1, static_cast<long>(j + 1) * (j + 2) * (j + 3)); };
    detail::set_claim(s, detail::claim_one);
    s.family = "telescoping-order-3";
    return s;
}

/// phi = -B_{2p+1}(j)/(2p+1), chi = j^{2p}, weight == 0.
inline WeightScheme scheme_bernoulli(int p, std::int64_t base = 2) {
    if (p < 1) throw std::domain_error("scheme_bernoulli: p must be >= 1");
    WeightScheme s;
    s.base = base;
    int deg = 2 * p + 1;
    s.phi = [deg](int j) { return -bernoulli_poly_at_int(deg, j) / deg; };
    s.chi = [p](int j) { return std::pow(static_cast<double>(j), 2 * p); };
    s.phi_exact = [deg](int j) -> Rational { return -bernoulli_poly(deg, Rational(j)) / Rational(deg); };
    s.chi_exact = [p](int j) -> Rational { return rational_pow(Rational(j), 2L * p); };
    detail::set_claim(s, detail::claim_zero);
    s.family = "bernoulli(p=" + std::to_string(p) + ")";
    return s;
}

/// phi(j) = cos(2 pi j x), chi = 0. Transcendental: no exact form.
inline WeightScheme scheme_cos(double x, std::int64_t base = 2) {
    WeightScheme s;
    s.base = base;
    s.phi = [x](int j) { return std::cos(2.0 * std::numbers::pi * j * x); };
    s.chi = [](int) { return 0.0; };
    s.family = "cos(2*pi*j*x)";
    return s;
}

/// Arbitrary double-valued scheme (no exact form).
inline WeightScheme scheme_custom(std::function<double(int)> phi, std::function<double(int)> chi,
                                  std::int64_t base = 2, std::string family = "custom") {
    WeightScheme s;
    s.base = base;
    s.phi = std::move(phi);
    s.chi = std::move(chi);
    s.family = std::move(family);
    return s;
}

}  // namespace multisect

#endif
