#ifndef MULTISECT_CENSUS_HPP
#define MULTISECT_CENSUS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "multisect/valuation.hpp"

namespace multisect {

/// Multiplicity map for a truncated index multiset on [1, limit].
/// Dense storage internally; absent entries mean multiplicity 0.
class MultisetCensus {
  public:
    explicit MultisetCensus(std::int64_t limit) : limit_(limit) {
        if (limit < 1) throw std::domain_error("MultisetCensus: limit must be >= 1");
        counts_.assign(static_cast<std::size_t>(limit) + 1, 0);
    }

    std::int64_t limit() const { return limit_; }

    std::int64_t count(std::int64_t m) const {
        if (m < 1 || m > limit_) return 0;
        return counts_[static_cast<std::size_t>(m)];
    }

    void add(std::int64_t m, std::int64_t k = 1) {
        if (m < 1 || m > limit_) throw std::domain_error("MultisetCensus::add: key out of range");
        counts_[static_cast<std::size_t>(m)] += k;
    }

    /// Total number of enumerated tuples.
    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    bool empty() const { return total() == 0; }

    bool operator==(const MultisetCensus& o) const {
        return limit_ == o.limit_ && counts_ == o.counts_;
    }

    /// Nonzero entries as an ordered map (for reporting and tests).
    std::map<std::int64_t, std::int64_t> nonzero() const {
        std::map<std::int64_t, std::int64_t> m;
        for (std::int64_t i = 1; i <= limit_; ++i)
            if (counts_[static_cast<std::size_t>(i)] != 0) m[i] = counts_[static_cast<std::size_t>(i)];
        return m;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::int64_t i = 1; i <= limit_; ++i)
            if (counts_[static_cast<std::size_t>(i)] != 0) f(i, counts_[static_cast<std::size_t>(i)]);
    }

  private:
    std::int64_t limit_;
    std::vector<std::int64_t> counts_;
};

namespace detail {
inline void check_census_args(std::int64_t base, std::int64_t N) {
    if (base < 2) throw std::domain_error("census: base must be >= 2");
    if (N < 1) throw std::domain_error("census: N must be >= 1");
}
}  // namespace detail

/// C_b: all (bn - k) b^j <= N over 0 < k < b, n >= 1, j >= 0.
inline MultisetCensus census_C(std::int64_t base, std::int64_t N) {
    detail::check_census_args(base, N);
    MultisetCensus c(N);
    for (std::int64_t bj = 1; bj <= N; bj *= base) {
        // (bn - k) b^j <= N  =>  bn - k <= N / b^j
        std::int64_t cap = N / bj;
        for (std::int64_t n = 1;; ++n) {
            std::int64_t smallest = base * n - (base - 1);
            if (smallest > cap) break;
            for (std::int64_t k = base - 1; k >= 1; --k) {
                std::int64_t r = base * n - k;
                if (r > cap) break;
                c.add(r * bj);
            }
        }
        if (bj > N / base) break;
    }
    return c;
}

/// D_b: all (bn) b^j <= N.
inline MultisetCensus census_D(std::int64_t base, std::int64_t N) {
    detail::check_census_args(base, N);
    MultisetCensus c(N);
    for (std::int64_t bj = 1; bj <= N; bj *= base) {
        std::int64_t cap = N / bj;
        for (std::int64_t n = 1; base * n <= cap; ++n) c.add(base * n * bj);
        if (bj > N / base) break;
    }
    return c;
}

/// E_b: each m with multiplicity nu_b(m).
inline MultisetCensus census_E(std::int64_t base, std::int64_t N) {
    detail::check_census_args(base, N);
    MultisetCensus c(N);
    // every multiple of base^j, j >= 1, contributes one copy
    for (std::int64_t bj = base; bj <= N; bj *= base) {
        for (std::int64_t m = bj; m <= N; m += bj) c.add(m);
        if (bj > N / base) break;
    }
    return c;
}

/// Truncated censuses for the finite-J split of the odd-dyadic enumeration.
/// high: {(2n-1) 2^j : j >= J} vs {p 2^J : p >= 1};
/// low:  {(2n-1) 2^j : 0 <= j < J} vs {p : p not == 0 mod 2^J}.
struct FiniteCensusResult {
    MultisetCensus high_factored;
    MultisetCensus high_arithmetic;
    MultisetCensus low_factored;
    MultisetCensus low_arithmetic;
};

inline FiniteCensusResult finite_census(int J, std::int64_t N) {
    if (J < 1) throw std::domain_error("finite_census: J must be >= 1");
    if (N < 1) throw std::domain_error("finite_census: N must be >= 1");
    FiniteCensusResult r{MultisetCensus(N), MultisetCensus(N), MultisetCensus(N), MultisetCensus(N)};
    std::int64_t p2 = 1;
    for (int j = 0; p2 <= N; ++j) {
        for (std::int64_t n = 1; (2 * n - 1) <= N / p2; ++n) {
            std::int64_t m = (2 * n - 1) * p2;
            if (j >= J)
                r.high_factored.add(m);
            else
                r.low_factored.add(m);
        }
        if (p2 > N / 2) break;
        p2 *= 2;
    }
    if (J >= 62) throw std::domain_error("finite_census: J too large");
    std::int64_t pJ = std::int64_t(1) << J;
    if (pJ <= N)
        for (std::int64_t p = 1; p * pJ <= N; ++p) r.high_arithmetic.add(p * pJ);
    for (std::int64_t p = 1; p <= N; ++p)
        if (p % pJ != 0) r.low_arithmetic.add(p);
    return r;
}

}  // namespace multisect

#endif
