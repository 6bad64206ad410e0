#ifndef MULTISECT_ENGINE_HPP
#define MULTISECT_ENGINE_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multisect/policy.hpp"
#include "multisect/rational.hpp"
#include "multisect/series_sum.hpp"
#include "multisect/special/products.hpp"
#include "multisect/special/zeta.hpp"
#include "multisect/valuation.hpp"
#include "multisect/weight_scheme.hpp"

namespace multisect {

/// Term supplier for the engine. `eval` is the term value; `log_eval` is the
/// optional log-term used by product mode (required when terms can be
/// non-positive in real arithmetic). Implementations must be safe for
/// concurrent calls.
template <class T>
struct SequenceOracleT {
    std::function<T(std::int64_t)> eval;
    std::function<T(std::int64_t)> log_eval;
};

using SequenceOracle = SequenceOracleT<double>;
using ComplexSequenceOracle = SequenceOracleT<std::complex<double>>;

struct ComplexEvalResult {
    std::complex<double> value{};
    double abs_error_estimate = 0.0;
    int j_used = 0;
    std::int64_t n_used = 0;
    bool converged = false;
};

namespace detail {

inline int nu2_fast(std::int64_t m) { return std::countr_zero(static_cast<std::uint64_t>(m)); }

constexpr std::int64_t kIndexLimit = std::int64_t(4) << 60;  // past this, decayed terms are treated as 0

template <class T>
struct ShellTotals {
    T value{};
    double err = 0.0;
    int j_used = 0;
    std::int64_t n_used = 0;
    bool converged = false;
};

/// Outer accumulator over j-shells. shell(j, eps_abs) -> PartialSum<T>.
/// Geometric shell-tail rule: the stop needs two consecutive trusted ratios
/// (<= 0.6) and bounds the tail with the larger of them, so a single shell
/// made anomalously small by a vanishing coefficient cannot fake decay.
/// Weight-vanishing shells are skipped outright and carry no decay evidence.
template <class T, class ShellFn>
ShellTotals<T> sum_shells(ShellFn&& shell, const TruncationPolicy& pol) {
    ShellTotals<T> out;
    T total{};
    double err_sum = 0.0;
    double prev_mag = -1.0, prev_rho = -1.0;
    int zero_streak = 0, vanished_streak = 0;
    bool all_converged = true;
    bool decaying = true;
    double j_tail = -1.0;  // < 0: not yet bounded

    int j = 0;
    while (j < pol.j_max_cap) {
        double scale = std::max(mag(total), 1e-300);
        double eps_abs = pol.target_rel_tol * scale / 16.0;
        PartialSum<T> s = shell(j, eps_abs);
        ++j;
        if (s.skipped) {
            // contributes exactly 0; a long run of vanishing weights is
            // treated as a vanishing tail (affine/polynomial coefficients
            // do not come back from 16 consecutive zeros)
            if (++vanished_streak >= 16) {
                j_tail = std::max(j_tail, 0.0);
                break;
            }
            continue;
        }
        vanished_streak = 0;
        total += s.value;
        err_sum += s.err;
        out.n_used = std::max(out.n_used, s.n_used);
        all_converged = all_converged && s.converged;
        if (!s.decaying) {
            decaying = false;
            break;
        }
        double sm = mag(s.value);
        scale = std::max(mag(total), 1e-300);
        if (sm == 0.0) {
            if (++zero_streak >= 2) {
                j_tail = 0.0;
                break;
            }
            continue;
        }
        zero_streak = 0;
        if (prev_mag > 0.0) {
            double rho = sm / prev_mag;
            if (rho <= 0.6 && prev_rho >= 0.0 && prev_rho <= 0.6) {
                double rho_max = std::max(rho, prev_rho);
                j_tail = sm * rho_max / (1.0 - rho_max);
                if (pol.tail_rule == TruncationPolicy::TailRule::geometric_ratio &&
                    j_tail <= 0.25 * pol.target_rel_tol * scale) {
                    prev_rho = rho;
                    break;
                }
            } else {
                j_tail = -1.0;
            }
            prev_rho = rho;
        }
        prev_mag = sm;
    }
    // nothing but vanishing weights: the sum is exactly zero
    if (prev_mag < 0.0 && zero_streak == 0 && vanished_streak > 0 && j_tail < 0.0) j_tail = 0.0;
    out.value = total;
    out.j_used = j;
    double scale = std::max(mag(total), 1e-300);
    out.err = err_sum + (j_tail >= 0.0 ? j_tail : scale);
    out.converged = all_converged && decaying && j_tail >= 0.0 &&
                    out.err <= pol.target_rel_tol * scale;
    return out;
}

// Generic multisection core over (phi, chi) shell weights of type T.
// product_mode sums log-terms; caller exponentiates.
template <class T>
struct MultisectionCore {
    std::int64_t base;
    std::function<T(int)> phi, chi;
    std::function<T(std::int64_t)> term;   // b_m or log a_m
    std::function<T(int)> claimed_weight;  // rhs weight per level; null: phi/chi sum

    // lhs: sum_j sum_n [ sum_{k=1..b-1} phi(j) f((bn-k) b^j) + chi(j) f((bn) b^j) ]
    ShellTotals<T> lhs(const TruncationPolicy& pol) const {
        return sum_shells<T>(
            [&](int j, double eps_abs) {
                std::int64_t bj = 1;
                bool overflow = false;
                for (int i = 0; i < j; ++i) {
                    if (mul_exceeds(bj, base, kIndexLimit)) {
                        overflow = true;
                        break;
                    }
                    bj *= base;
                }
                if (overflow) return PartialSum<T>{T{}, 0.0, 0, true, true};
                T pj = phi(j), cj = chi(j);
                if (mag(pj) == 0.0 && mag(cj) == 0.0) {
                    PartialSum<T> skip;
                    skip.converged = true;
                    skip.skipped = true;
                    return skip;
                }
                auto f = [&](std::int64_t n) -> T {
                    T acc{};
                    if (mul_exceeds(n, base, kIndexLimit / bj)) return acc;
                    std::int64_t nb = n * base;
                    for (std::int64_t k = 1; k <= base - 1; ++k) acc += pj * term((nb - k) * bj);
                    acc += cj * term(nb * bj);
                    return acc;
                };
                return adaptive_sum<T>(f, eps_abs, pol.target_rel_tol / 16.0, pol.n_max_cap);
            },
            pol);
    }

    // rhs: sum_m weight(m) f(m), enumerated by valuation shells
    // (nu_b(m) = j fixed per shell; weight constant there).
    ShellTotals<T> rhs(const TruncationPolicy& pol) const {
        std::vector<T> wgt;  // cumulative weight at level j, filled lazily
        T chi_sum{};
        auto weight_at = [&](int j) -> T {
            if (claimed_weight) return claimed_weight(j);
            while (static_cast<int>(wgt.size()) <= j) {
                int k = static_cast<int>(wgt.size());
                wgt.push_back(phi(k) + chi_sum);
                chi_sum += chi(k);
            }
            return wgt[static_cast<std::size_t>(j)];
        };
        return sum_shells<T>(
            [&](int j, double eps_abs) {
                std::int64_t bj = 1;
                bool overflow = false;
                for (int i = 0; i < j; ++i) {
                    if (mul_exceeds(bj, base, kIndexLimit)) {
                        overflow = true;
                        break;
                    }
                    bj *= base;
                }
                if (overflow) return PartialSum<T>{T{}, 0.0, 0, true, true};
                T w = weight_at(j);
                if (mag(w) == 0.0) {
                    PartialSum<T> skip;
                    skip.converged = true;
                    skip.skipped = true;
                    return skip;
                }
                auto f = [&](std::int64_t i) -> T {
                    // i-th positive integer not divisible by base
                    std::int64_t n = i + (i - 1) / (base - 1);
                    if (mul_exceeds(n, bj, kIndexLimit)) return T{};
                    return w * term(n * bj);
                };
                return adaptive_sum<T>(f, eps_abs, pol.target_rel_tol / 16.0, pol.n_max_cap);
            },
            pol);
    }
};

template <class T>
EvalResult to_eval_result(const ShellTotals<T>& t) {
    static_assert(std::is_same_v<T, double>);
    return EvalResult{t.value, t.err, t.j_used, t.n_used, t.converged};
}

inline ComplexEvalResult to_complex_result(const ShellTotals<std::complex<double>>& t) {
    return ComplexEvalResult{t.value, t.err, t.j_used, t.n_used, t.converged};
}

inline EvalResult exp_result(const ShellTotals<double>& logsum) {
    double v = std::exp(logsum.value);
    return EvalResult{v, std::abs(v) * logsum.err, logsum.j_used, logsum.n_used, logsum.converged};
}

template <class T>
std::function<T(std::int64_t)> log_term_of(const SequenceOracleT<T>& seq) {
    if (seq.log_eval) return seq.log_eval;
    if constexpr (std::is_same_v<T, double>) {
        auto ev = seq.eval;
        return [ev](std::int64_t m) {
            double a = ev(m);
            if (!(a > 0.0))
                throw std::domain_error(
                    "product mode: non-positive term and no log_eval supplied");
            return std::log(a);
        };
    } else {
        auto ev = seq.eval;
        return [ev](std::int64_t m) { return std::log(ev(m)); };
    }
}

}  // namespace detail

namespace detail {

// rhs weight per valuation level: the scheme's claimed closed form when
// present (this is what the printed identities state), else the phi/chi sum.
inline std::function<double(int)> rhs_weight_fn(const WeightScheme& scheme) {
    return [&scheme](int nu) { return claimed_weight_at(scheme, nu); };
}

}  // namespace detail

/// Both sides of the general additive multisection identity under `scheme`.
inline std::pair<EvalResult, EvalResult> eval_multisection_sum(const SequenceOracle& seq,
                                                               const WeightScheme& scheme,
                                                               const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::MultisectionCore<double> core{scheme.base, scheme.phi, scheme.chi, seq.eval,
                                          detail::rhs_weight_fn(scheme)};
    return {detail::to_eval_result(core.lhs(pol)), detail::to_eval_result(core.rhs(pol))};
}

/// Both sides of the multiplicative identity; log-domain internally.
inline std::pair<EvalResult, EvalResult> eval_multisection_product(const SequenceOracle& seq,
                                                                   const WeightScheme& scheme,
                                                                   const TruncationPolicy& pol = {}) {
    pol.validate();
    detail::MultisectionCore<double> core{scheme.base, scheme.phi, scheme.chi,
                                          detail::log_term_of(seq), detail::rhs_weight_fn(scheme)};
    return {detail::exp_result(core.lhs(pol)), detail::exp_result(core.rhs(pol))};
}

enum class MultisectionMode { sum, product };

/// q-parameterized dissection (phi = q^j, chi = (1-q) q^j); cumulative weight
/// is identically 1, so the plain sum/product of the sequence sits on the rhs.
inline std::pair<EvalResult, EvalResult> eval_q_multisection(const SequenceOracle& seq, double q,
                                                             std::int64_t base, MultisectionMode mode,
                                                             const TruncationPolicy& pol = {}) {
    pol.validate();
    auto phi = [q](int j) { return std::pow(q, j); };
    auto chi = [q](int j) { return (1.0 - q) * std::pow(q, j); };
    auto one = [](int) { return 1.0; };
    if (mode == MultisectionMode::sum) {
        detail::MultisectionCore<double> core{base, phi, chi, seq.eval, one};
        return {detail::to_eval_result(core.lhs(pol)), detail::to_eval_result(core.rhs(pol))};
    }
    detail::MultisectionCore<double> core{base, phi, chi, detail::log_term_of(seq), one};
    return {detail::exp_result(core.lhs(pol)), detail::exp_result(core.rhs(pol))};
}

/// Complex-q overload (sum mode); product mode requires a complex log_eval.
inline std::pair<ComplexEvalResult, ComplexEvalResult> eval_q_multisection(
    const ComplexSequenceOracle& seq, std::complex<double> q, std::int64_t base,
    MultisectionMode mode, const TruncationPolicy& pol = {}) {
    pol.validate();
    using C = std::complex<double>;
    auto phi = [q](int j) { return std::pow(q, j); };
    auto chi = [q](int j) { return (C(1.0) - q) * std::pow(q, j); };
    auto one = [](int) { return C(1.0); };
    if (mode == MultisectionMode::sum) {
        detail::MultisectionCore<C> core{base, phi, chi, seq.eval, one};
        return {detail::to_complex_result(core.lhs(pol)), detail::to_complex_result(core.rhs(pol))};
    }
    detail::MultisectionCore<C> core{base, phi, chi, detail::log_term_of(seq), one};
    auto explog = [](const detail::ShellTotals<C>& t) {
        C v = std::exp(t.value);
        return ComplexEvalResult{v, std::abs(v) * t.err, t.j_used, t.n_used, t.converged};
    };
    return {explog(core.lhs(pol)), explog(core.rhs(pol))};
}

/// Four-fold dyadic multisection of a double-indexed sequence:
/// sum over j,k,n,m of 2^{j+k} [b(o,o) + b(e,e) - b(e,o) - b(o,e)]
/// versus the plain double sum.
inline std::pair<EvalResult, EvalResult> eval_double_multisection(
    const std::function<double(std::int64_t, std::int64_t)>& b, const TruncationPolicy& pol = {}) {
    pol.validate();

    auto level_sum = [&](int j, int k, double eps_abs) {
        std::int64_t pj = std::int64_t(1) << j, pk = std::int64_t(1) << k;
        auto outer = [&](std::int64_t n) -> double {
            std::int64_t on = (2 * n - 1) * pj, en = (2 * n) * pj;
            auto inner = [&](std::int64_t m) -> double {
                std::int64_t om = (2 * m - 1) * pk, em = (2 * m) * pk;
                return b(on, om) + b(en, em) - b(en, om) - b(on, em);
            };
            auto s = detail::adaptive_sum<double>(inner, eps_abs / 8.0, pol.target_rel_tol / 64.0,
                                                  pol.n_max_cap);
            return s.value;
        };
        auto s = detail::adaptive_sum<double>(outer, eps_abs, pol.target_rel_tol / 16.0, pol.n_max_cap);
        return s;
    };

    // diagonals e = j + k, ascending; weight 2^{j+k} = 2^e
    EvalResult lhs;
    {
        double total = 0.0, err = 0.0, prev_mag = -1.0, j_tail = -1.0;
        bool all_conv = true;
        int e = 0;
        std::int64_t n_used = 0;
        for (; e <= 2 * pol.j_max_cap && e < 62; ++e) {
            double scale = std::max(std::abs(total), 1e-300);
            double eps_abs = pol.target_rel_tol * scale / 16.0;
            double diag = 0.0;
            for (int j = 0; j <= e; ++j) {
                auto s = level_sum(j, e - j, eps_abs / (e + 1.0));
                diag += std::ldexp(s.value, e);
                err += std::ldexp(s.err, e);
                all_conv = all_conv && s.converged;
                n_used = std::max(n_used, s.n_used);
            }
            total += diag;
            scale = std::max(std::abs(total), 1e-300);
            double dm = std::abs(diag);
            if (prev_mag > 0.0 && dm > 0.0) {
                double rho = dm / prev_mag;
                if (rho <= 0.6) {
                    j_tail = dm * rho / (1.0 - rho);
                    if (j_tail <= 0.25 * pol.target_rel_tol * scale) {
                        ++e;
                        break;
                    }
                } else {
                    j_tail = -1.0;
                }
            }
            if (dm == 0.0 && e > 1) {
                j_tail = 0.0;
                ++e;
                break;
            }
            prev_mag = dm;
        }
        double scale = std::max(std::abs(total), 1e-300);
        lhs.value = total;
        lhs.j_used = e;
        lhs.n_used = n_used;
        lhs.abs_error_estimate = err + (j_tail >= 0.0 ? j_tail : scale);
        lhs.converged = all_conv && j_tail >= 0.0 && lhs.abs_error_estimate <= pol.target_rel_tol * scale;
    }

    // plain double sum
    EvalResult rhs;
    {
        auto outer = [&](std::int64_t p) -> double {
            auto inner = [&](std::int64_t q) { return b(p, q); };
            auto s = detail::adaptive_sum<double>(inner, 0.0, pol.target_rel_tol / 64.0, pol.n_max_cap);
            return s.value;
        };
        auto s = detail::adaptive_sum<double>(outer, 0.0, pol.target_rel_tol / 16.0, pol.n_max_cap);
        rhs.value = s.value;
        rhs.abs_error_estimate = s.err;
        rhs.n_used = s.n_used;
        rhs.converged = s.converged;
    }
    return {lhs, rhs};
}

struct LambertRelationReport {
    double lhs = 0.0;  // f(q) summed directly
    double rhs = 0.0;  // the 2^{(mu+1)j+k}-weighted double sum over g
    double rel_discrepancy = 0.0;
    bool converged = false;
};

/// Relation between the Lambert series f(q) = sum n^mu q^n/(1-q^n) and
/// g(q) = sum n^mu q^n/(1+q^n):
///     f(q) = sum_{j,k>=0} 2^{(mu+1)j+k} [ g(q^{2^{j+k}}) - 2^{mu+1} g(q^{2^{j+k+1}}) ].
/// (The mu = 1 weight reduces to 2^{2j+k}.)
inline LambertRelationReport lambert_relation_check(int mu, double q,
                                                    const TruncationPolicy& pol = {}) {
    pol.validate();
    if (mu < 1) throw std::domain_error("lambert_relation_check: mu must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("lambert_relation_check: q must be in (0,1)");

    LambertRelationReport rep;
    rep.lhs = special::lambert_series(mu, q, false);

    // g(q^{2^e}) cached per level; underflows to ~q^{2^e} quickly
    std::vector<double> g;
    {
        double qe = q;
        for (int e = 0; e < 64; ++e) {
            g.push_back(qe > 0.0 ? special::lambert_series(mu, qe, true) : 0.0);
            if (qe == 0.0 || g.back() < 1e-320) {
                g.push_back(0.0);
                break;
            }
            qe *= qe;
        }
        g.push_back(0.0);
    }
    auto g_at = [&](int e) { return e < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(e)] : 0.0; };

    double acc = 0.0;
    double w2 = std::ldexp(1.0, mu + 1);
    bool hit_cap = true;
    for (int e = 0; e < 62; ++e) {
        double bracket = g_at(e) - w2 * g_at(e + 1);
        double diag_weight = 0.0;  // sum over j+k=e of 2^{(mu+1)j+k}
        for (int j = 0; j <= e; ++j) diag_weight += std::ldexp(1.0, (mu + 1) * j + (e - j));
        double contrib = diag_weight * bracket;
        acc += contrib;
        if (e > 2 && std::abs(contrib) < 1e-18 * std::abs(acc)) {
            hit_cap = false;
            break;
        }
    }
    rep.rhs = acc;
    rep.rel_discrepancy = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.lhs), 1e-300);
    rep.converged = !hit_cap;
    return rep;
}

/// Exact power-series coefficients of sum_{j=0}^{J} 2^j t^{2^j} / (1 + t^{2^j})
/// up to t^{n_max}: c[n] = 1 except c[n] = 1 - 2^{J+1} at multiples of 2^{J+1}.
/// Returned vector is indexed by the power n (entry 0 unused).
inline std::vector<std::int64_t> teixeira_weight_pattern(int J, std::int64_t n_max) {
    if (J < 0 || J > 60) throw std::domain_error("teixeira_weight_pattern: J out of range");
    if (n_max < 1) throw std::domain_error("teixeira_weight_pattern: n_max must be >= 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int j = 0; j <= J; ++j) {
        std::int64_t p = std::int64_t(1) << j;
        std::int64_t sign = 1;
        for (std::int64_t m = p; m <= n_max; m += p) {  // m = i * 2^j, sign (-1)^{i-1}
            c[static_cast<std::size_t>(m)] += sign * p;
            sign = -sign;
        }
    }
    return c;
}

/// m-side of a dyadic-weight Dirichlet series: sum_m w(nu_2(m)) / m^s,
/// direct head plus exact odd-Hurwitz shell tails.
inline EvalResult weighted_dirichlet_sum(const std::function<double(int)>& weight_of_nu, double s,
                                         const TruncationPolicy& pol = {}) {
    pol.validate();
    if (!(s > 1.0)) throw std::domain_error("weighted_dirichlet_sum: s must be > 1");
    const std::int64_t M = std::min<std::int64_t>(pol.n_max_cap, 200000);
    // summed small-to-large: the late terms fall below the accumulator ulp
    // and a forward pass picks up a biased ~1e-12 drift
    double acc = 0.0;
    for (std::int64_t m = M; m >= 1; --m)
        acc += weight_of_nu(detail::nu2_fast(m)) * std::pow(static_cast<double>(m), -s);

    // tail: for each shell j, odd n with n 2^j > M
    double tail_err = 0.0;
    std::int64_t n_used = M;
    int j = 0;
    int tiny = 0;
    for (; j < pol.j_max_cap; ++j) {
        double w = weight_of_nu(j);
        double pj = std::ldexp(1.0, j);
        std::int64_t T = j < 62 ? M / (std::int64_t(1) << j) : 0;
        std::int64_t nmin = T + 1;
        if (nmin % 2 == 0) ++nmin;
        std::int64_t r0i = (nmin - 1) / 2;  // exact: nmin is odd
        double r0 = static_cast<double>(r0i);
        double shell_tail =
            w * std::pow(pj, -s) * std::pow(2.0, -s) * special::hurwitz_zeta(s, r0 + 0.5);
        acc += shell_tail;
        // once 2^j > M the whole shell is in the tail, geometric in j from
        // there; zero-weight shells must not end the loop on their own
        if (T == 0 && std::abs(shell_tail) < 1e-18 * std::abs(acc)) {
            if (++tiny >= 3) break;
        } else {
            tiny = 0;
        }
    }
    EvalResult r;
    r.value = acc;
    r.j_used = j;
    r.n_used = n_used;
    r.abs_error_estimate = tail_err + 1e-14 * std::abs(acc);
    r.converged = true;
    return r;
}

enum class GeneratingVariant { t_series, dirichlet, chi_series };

struct GeneratingParams {
    double t = 0.0;  // |t| < 1 for t_series; weight base for chi_series
    double s = 2.0;  // Dirichlet exponent, s > 1
};

/// The three generating-function faces of the dyadic multisection:
///  t_series:   sum_j phi(j) t^{2^j}/(1 - t^{2^{j+1}})      vs sum_m phi(nu_2(m)) t^m
///  dirichlet:  (1-2^{-s}) zeta(s) sum_j phi(j) 2^{-sj}     vs sum_m phi(nu_2(m))/m^s
///  chi_series: sum_m t^{nu_2(m)}/m^s                       vs (2^s-1)/(2^s-t) zeta(s)
inline std::pair<EvalResult, EvalResult> generating_identities(
    const std::function<double(int)>& phi, GeneratingVariant variant, const GeneratingParams& p,
    const TruncationPolicy& pol = {}) {
    pol.validate();
    switch (variant) {
        case GeneratingVariant::t_series: {
            if (!(std::abs(p.t) < 1.0))
                throw std::domain_error("generating_identities: need |t| < 1");
            EvalResult lhs;
            {
                double acc = 0.0;
                int j = 0;
                for (; j < pol.j_max_cap; ++j) {
                    double tp = std::pow(std::abs(p.t), std::ldexp(1.0, j));
                    if (tp == 0.0) break;
                    double num = std::pow(p.t, std::ldexp(1.0, j));
                    double den = 1.0 - std::pow(p.t, std::ldexp(1.0, j + 1));
                    double term = phi(j) * num / den;
                    acc += term;
                    if (std::abs(term) < 1e-18 * std::max(std::abs(acc), 1e-300) && j > 2) break;
                }
                lhs.value = acc;
                lhs.j_used = j;
                lhs.abs_error_estimate = 1e-15 * std::abs(acc);
                lhs.converged = true;
            }
            auto f = [&](std::int64_t m) {
                return phi(detail::nu2_fast(m)) * std::pow(p.t, static_cast<double>(m));
            };
            auto s = detail::adaptive_sum<double>(f, 0.0, pol.target_rel_tol / 4.0, pol.n_max_cap);
            EvalResult rhs{s.value, s.err, 0, s.n_used, s.converged};
            return {lhs, rhs};
        }
        case GeneratingVariant::dirichlet: {
            if (!(p.s > 1.0)) throw std::domain_error("generating_identities: need s > 1");
            EvalResult lhs;
            {
                double zs = special::riemann_zeta(p.s);
                double acc = 0.0;
                int j = 0;
                for (; j < pol.j_max_cap; ++j) {
                    double term = phi(j) * std::pow(2.0, -p.s * j);
                    acc += term;
                    if (std::abs(term) < 1e-18 * std::max(std::abs(acc), 1e-300) && j > 2) break;
                }
                lhs.value = (1.0 - std::pow(2.0, -p.s)) * zs * acc;
                lhs.j_used = j;
                lhs.abs_error_estimate = 1e-14 * std::abs(lhs.value);
                lhs.converged = true;
            }
            EvalResult rhs = weighted_dirichlet_sum(phi, p.s, pol);
            return {lhs, rhs};
        }
        case GeneratingVariant::chi_series: {
            if (!(p.s > 1.0)) throw std::domain_error("generating_identities: need s > 1");
            if (!(std::abs(p.t) < std::pow(2.0, p.s)))
                throw std::domain_error("generating_identities: need |t| < 2^s");
            EvalResult lhs = weighted_dirichlet_sum(
                [&](int nu) { return std::pow(p.t, nu); }, p.s, pol);
            EvalResult rhs;
            rhs.value = (std::pow(2.0, p.s) - 1.0) / (std::pow(2.0, p.s) - p.t) *
                        special::riemann_zeta(p.s);
            rhs.abs_error_estimate = 1e-14 * std::abs(rhs.value);
            rhs.converged = true;
            return {lhs, rhs};
        }
    }
    throw std::logic_error("generating_identities: unknown variant");
}

/// Conditionally convergent sum_m cos(2 pi x nu_2(2m)) / m for rational x,
/// evaluated by period-window-averaged partial sums. Convergence requires the
/// dyadic mean sum_j cos(2 pi x (j+1)) 2^{-j} to vanish (x = 1/6 does; the
/// engine checks the criterion analytically and flags divergence otherwise).
/// No absolute tail bound exists here, so the effective tolerance is floored
/// at 1e-4 regardless of the policy target.
inline EvalResult conditional_sum_nu_cos(const Rational& x, const TruncationPolicy& pol = {}) {
    pol.validate();
    constexpr double pi = std::numbers::pi;
    double xd = to_double(x);

    // A = Re( z / (1 - z/2) ), z = e^{2 pi i x}: coefficient of log M in S_M
    std::complex<double> z = std::exp(std::complex<double>(0.0, 2.0 * pi * xd));
    double A = (z / (1.0 - 0.5 * z)).real();

    EvalResult r;
    if (std::abs(A) > 1e-9) {
        r.converged = false;
        r.abs_error_estimate = std::numeric_limits<double>::infinity();
        return r;
    }

    // 2^20 terms by default; a smaller n_max_cap scales the budget down
    const std::int64_t kDefaultCap = std::int64_t(1) << 20;
    const std::int64_t cap =
        pol.n_max_cap >= kDefaultCap / 16 ? kDefaultCap : pol.n_max_cap * 16;
    const int window = cap >= 4096 ? 384 : static_cast<int>(cap / 8);  // 6*64: whole weight periods
    double wtab[64];
    for (int j = 0; j < 64; ++j) wtab[j] = std::cos(2.0 * pi * xd * (j + 1));

    double acc = 0.0;
    double win_full = 0.0, win_half = 0.0;
    const std::int64_t half = cap / 2;
    for (std::int64_t m = 1; m <= cap; ++m) {
        acc += wtab[detail::nu2_fast(m)] / static_cast<double>(m);
        if (m > half - window && m <= half) win_half += acc;
        if (m > cap - window) win_full += acc;
    }
    win_full /= window;
    win_half /= window;

    r.value = win_full;
    r.n_used = cap;
    r.abs_error_estimate = std::abs(win_full - win_half) + 8.0 / static_cast<double>(cap);
    r.converged = r.abs_error_estimate <= std::max(pol.target_rel_tol, 1e-4) * std::abs(win_full);
    return r;
}

}  // namespace multisect

#endif
