#ifndef MULTISECT_BERNOULLI_HPP
#define MULTISECT_BERNOULLI_HPP

#include <stdexcept>
#include <vector>

#include "multisect/rational.hpp"

namespace multisect {

namespace detail {

// binomial(n, k) exact
inline Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

class BernoulliCache {
  public:
    static const BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }
    const Rational& number(int n) const {
        if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
        if (n >= static_cast<int>(values_.size()))
            throw std::domain_error("bernoulli: degree above cache limit 64");
        return values_[static_cast<std::size_t>(n)];
    }

  private:
    // B_0..B_64 via sum_{j<=n} C(n+1,j) B_j = 0, convention B_1 = -1/2.
    BernoulliCache() {
        constexpr int kMax = 64;
        values_.resize(kMax + 1);
        values_[0] = Rational(1);
        for (int n = 1; n <= kMax; ++n) {
            Rational s(0);
            for (int j = 0; j < n; ++j) s += binom(n + 1, j) * values_[static_cast<std::size_t>(j)];
            values_[static_cast<std::size_t>(n)] = -s / Rational(n + 1);
        }
    }
    std::vector<Rational> values_;
};

}  // namespace detail

/// Exact Bernoulli number B_n (B_1 = -1/2), cached up to n = 64.
inline const Rational& bernoulli_number(int n) { return detail::BernoulliCache::instance().number(n); }

/// Exact Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw std::domain_error("bernoulli_poly: n must be >= 0");
    Rational acc(0);
    Rational xpow(1);
    // accumulate from k = n down so xpow tracks x^{n-k}
    for (int k = n; k >= 0; --k) {
        acc += detail::binom(n, k) * bernoulli_number(k) * xpow;
        xpow *= x;
    }
    return acc;
}

inline double bernoulli_poly_d(int n, double x) {
    double acc = 0.0, xpow = 1.0;
    for (int k = n; k >= 0; --k) {
        acc += to_double(detail::binom(n, k) * bernoulli_number(k)) * xpow;
        xpow *= x;
    }
    return acc;
}

/// B_n(j) at integer arguments, rounded from the exact value. The odd-degree
/// polynomials vanish at 0 and 1, and the double-arithmetic evaluation leaks
/// ~1e-16 there, which matters when the factor multiplies a relatively large
/// term.
inline double bernoulli_poly_at_int(int n, long j) {
    return to_double(bernoulli_poly(n, Rational(j)));
}

}  // namespace multisect

#endif
