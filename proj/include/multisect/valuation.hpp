#ifndef MULTISECT_VALUATION_HPP
#define MULTISECT_VALUATION_HPP

#include <cstdint>
#include <stdexcept>

namespace multisect {

/// b-adic factorization m = cofactor * base^nu with base not dividing cofactor.
struct Valuation {
    std::int64_t m;
    std::int64_t base;
    int nu;
    std::int64_t cofactor;
};

/// Largest exponent nu with base^nu | m, plus the cofactor m / base^nu.
inline Valuation valuation(std::int64_t m, std::int64_t base) {
    if (m < 1) throw std::domain_error("valuation: m must be >= 1");
    if (base < 2) throw std::domain_error("valuation: base must be >= 2");
    int nu = 0;
    std::int64_t c = m;
    while (c % base == 0) {
        c /= base;
        ++nu;
    }
    return Valuation{m, base, nu, c};
}

inline int nu_b(std::int64_t m, std::int64_t base) { return valuation(m, base).nu; }

/// base^j as int64, throwing if it would exceed `limit`.
inline std::int64_t checked_pow(std::int64_t base, int j, std::int64_t limit) {
    std::int64_t p = 1;
    for (int i = 0; i < j; ++i) {
        if (p > limit / base) throw std::overflow_error("checked_pow: overflow");
        p *= base;
    }
    return p;
}

/// True iff a*b would exceed limit (a, b >= 0).
inline bool mul_exceeds(std::int64_t a, std::int64_t b, std::int64_t limit) {
    if (a == 0 || b == 0) return false;
    return a > limit / b;
}

}  // namespace multisect

#endif
