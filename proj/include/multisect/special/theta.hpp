#ifndef MULTISECT_SPECIAL_THETA_HPP
#define MULTISECT_SPECIAL_THETA_HPP

#include <cmath>
#include <stdexcept>

#include "multisect/special/precision.hpp"

namespace multisect::special {

/// Jacobi theta_2(0, q) = 2 sum_{n>=0} q^{(n+1/2)^2}, nome q in [0, 1).
inline double theta2(double q, const PrecisionContext& ctx = {}) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("theta2: nome must be in [0,1)");
    if (q == 0.0) return 0.0;
    double acc = 0.0;
    for (int n = 0; n < ctx.series_term_cap; ++n) {
        double e = (n + 0.5) * (n + 0.5);
        double t = std::pow(q, e);
        acc += t;
        if (t < 1e-18 * acc || t == 0.0) break;
    }
    return 2.0 * acc;
}

/// theta_3(0, q) - 1 = 2 sum_{n>=1} q^{n^2}, kept separate so tiny nomes do
/// not lose precision against the leading 1.
inline double theta3_minus_1(double q, const PrecisionContext& ctx = {}) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("theta3: nome must be in [0,1)");
    double acc = 0.0;
    for (int n = 1; n < ctx.series_term_cap; ++n) {
        double t = std::pow(q, static_cast<double>(n) * n);
        acc += t;
        if (t < 1e-18 * (1.0 + acc) || t == 0.0) break;
    }
    return 2.0 * acc;
}

/// Jacobi theta_3(0, q) = 1 + 2 sum_{n>=1} q^{n^2}, nome q in [0, 1).
inline double theta3(double q, const PrecisionContext& ctx = {}) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("theta3: nome must be in [0,1)");
    double acc = 0.0;
    for (int n = 1; n < ctx.series_term_cap; ++n) {
        double t = std::pow(q, static_cast<double>(n) * n);
        acc += t;
        if (t < 1e-18 * (1.0 + acc) || t == 0.0) break;
    }
    return 1.0 + 2.0 * acc;
}

}  // namespace multisect::special

#endif
