#ifndef MULTISECT_SPECIAL_QSERIES_HPP
#define MULTISECT_SPECIAL_QSERIES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "multisect/special/precision.hpp"

namespace multisect::special {

/// q-Pochhammer (a; q)_inf = prod_{k>=0} (1 - a q^k), |q| < 1.
/// Truncated once |a q^k| drops below ulp scale relative to the remaining
/// geometric factor mass.
inline std::complex<double> q_pochhammer(std::complex<double> a, std::complex<double> q,
                                          const PrecisionContext& ctx = {}) {
    double qa = std::abs(q);
    if (qa >= 1.0) throw std::domain_error("q_pochhammer: |q| must be < 1");
    if (a == 0.0) return 1.0;
    std::complex<double> prod = 1.0;
    std::complex<double> aqk = a;
    double cutoff = 1.1e-16 * (1.0 - qa);
    for (int k = 0; k < ctx.series_term_cap; ++k) {
        prod *= (1.0 - aqk);
        aqk *= q;
        if (std::abs(aqk) < cutoff) break;
    }
    return prod;
}

inline double q_pochhammer(double a, double q) { return q_pochhammer(std::complex<double>(a), std::complex<double>(q)).real(); }

/// log (a; q)_inf for real 0 <= a < 1, 0 <= q < 1 (all factors positive).
inline double log_q_pochhammer(double a, double q) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("log_q_pochhammer: q must be in [0,1)");
    if (a < 0.0 || a >= 1.0) throw std::domain_error("log_q_pochhammer: a must be in [0,1)");
    if (a == 0.0) return 0.0;
    double acc = 0.0;
    double aqk = a;
    double cutoff = 1.1e-16 * (1.0 - q);
    for (int k = 0; k < 2000000; ++k) {  // cutoff fires long before this
        acc += std::log1p(-aqk);
        aqk *= q;
        if (aqk < cutoff) break;
    }
    return acc;
}

}  // namespace multisect::special

#endif
