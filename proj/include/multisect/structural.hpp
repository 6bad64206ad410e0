#ifndef MULTISECT_STRUCTURAL_HPP
#define MULTISECT_STRUCTURAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multisect/census.hpp"
#include "multisect/rational.hpp"
#include "multisect/weight_scheme.hpp"

namespace multisect {

struct StructuralReport {
    bool pass = false;
    std::optional<std::int64_t> first_mismatch;
    std::int64_t limit = 0;
    std::int64_t tuples = 0;  // enumerated (k, n, j) entries
};

/// Brute-force structural oracle: enumerate every tuple index <= N, accumulate
/// the exact exponent collected by each m, and compare against the scheme's
/// claimed closed-form weight. This is the combinatorial fact behind every
/// identity in the catalog, so it never touches floating point. A scheme
/// whose phi/chi no longer telescope to the claim fails at the smallest
/// affected m (= base, when chi(0) is perturbed).
inline StructuralReport structural_check(const WeightScheme& scheme, std::int64_t N) {
    if (!scheme.exact())
        throw std::domain_error("structural_check: scheme '" + scheme.family +
                                "' has no exact form; use the floating-point engine");
    if (N < 1) throw std::domain_error("structural_check: N must be >= 1");
    const std::int64_t b = scheme.base;

    std::vector<Rational> acc(static_cast<std::size_t>(N) + 1, Rational(0));
    StructuralReport rep;
    rep.limit = N;

    std::int64_t bj = 1;
    for (int j = 0; bj <= N; ++j) {
        const Rational phi_j = scheme.phi_exact(j);
        const Rational chi_j = scheme.chi_exact(j);
        const std::int64_t cap = N / bj;
        for (std::int64_t n = 1; b * n - (b - 1) <= cap; ++n) {
            for (std::int64_t k = b - 1; k >= 1; --k) {
                std::int64_t r = b * n - k;
                if (r > cap) break;
                acc[static_cast<std::size_t>(r * bj)] += phi_j;
                ++rep.tuples;
            }
            if (b * n <= cap) {
                acc[static_cast<std::size_t>(b * n * bj)] += chi_j;
                ++rep.tuples;
            }
        }
        if (bj > N / b) break;
        bj *= b;
    }

    // the claimed weight depends on m only through nu_b(m); cache by level
    std::vector<Rational> weight_by_nu;
    {
        std::int64_t p = 1;
        for (int nu = 0;; ++nu) {
            weight_by_nu.push_back(claimed_weight_exact_at(scheme, nu));
            if (p > N / b) break;
            p *= b;
        }
    }

    for (std::int64_t m = 1; m <= N; ++m) {
        int nu = nu_b(m, b);
        if (acc[static_cast<std::size_t>(m)] != weight_by_nu[static_cast<std::size_t>(nu)]) {
            rep.pass = false;
            rep.first_mismatch = m;
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

struct PairwiseReport {
    bool pass = false;
    Rational lhs;
    Rational rhs;
};

namespace detail {

// sum over unordered pairs of distinct positions of a multiset:
// (S1^2 - S2) / 2 with S1 = sum of values, S2 = sum of squares.
inline Rational pair_sum(const MultisetCensus& census,
                         const std::function<Rational(std::int64_t)>& seq) {
    Rational s1(0), s2(0);
    census.for_each([&](std::int64_t m, std::int64_t mult) {
        Rational v = seq(m);
        s1 += Rational(static_cast<long>(mult)) * v;
        s2 += Rational(static_cast<long>(mult)) * v * v;
    });
    return (s1 * s1 - s2) / Rational(2);
}

}  // namespace detail

/// The closing remark of the basic census theorem: any symmetric form over the
/// multisets C_b u D_b and N u E_b agrees. Checked here for the elementary
/// symmetric polynomial of degree 2, in exact arithmetic.
inline PairwiseReport pairwise_symmetric_check(std::int64_t base, std::int64_t N,
                                               const std::function<Rational(std::int64_t)>& seq) {
    MultisetCensus side1 = census_C(base, N);
    MultisetCensus d = census_D(base, N);
    d.for_each([&](std::int64_t m, std::int64_t mult) { side1.add(m, mult); });

    MultisetCensus side2(N);
    for (std::int64_t m = 1; m <= N; ++m) side2.add(m);
    MultisetCensus e = census_E(base, N);
    e.for_each([&](std::int64_t m, std::int64_t mult) { side2.add(m, mult); });

    PairwiseReport rep;
    rep.lhs = detail::pair_sum(side1, seq);
    rep.rhs = detail::pair_sum(side2, seq);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

/// The Bernoulli scheme phi = -B_{2p+1}(j)/(2p+1), chi = j^{2p} collapses the
/// cumulative weight to zero for every m; verified by the structural oracle.
inline StructuralReport bernoulli_weight_check(int p, std::int64_t N) {
    if (p < 1) throw std::domain_error("bernoulli_weight_check: p must be >= 1");
    WeightScheme s = scheme_bernoulli(p);
    // every cumulative weight must be exactly zero
    std::int64_t bj = 1;
    for (int nu = 0;; ++nu) {
        if (weight_exact(bj, s) != 0) {
            StructuralReport rep;
            rep.limit = N;
            rep.pass = false;
            rep.first_mismatch = bj;
            return rep;
        }
        if (bj > N / 2) break;
        bj *= 2;
    }
    return structural_check(s, N);
}

}  // namespace multisect

#endif
