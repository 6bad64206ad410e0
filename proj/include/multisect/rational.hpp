#ifndef MULTISECT_RATIONAL_HPP
#define MULTISECT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace multisect {

/// Exact rational number. All census/structural bookkeeping runs on these;
/// floating point never enters the exact layer.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// q^e for integer e (negative exponents allowed for nonzero q).
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw std::domain_error("rational_pow: 0^negative");
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace multisect

#endif
