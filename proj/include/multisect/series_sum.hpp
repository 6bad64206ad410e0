#ifndef MULTISECT_SERIES_SUM_HPP
#define MULTISECT_SERIES_SUM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "multisect/policy.hpp"

namespace multisect {

namespace detail {

inline double mag(double x) { return std::abs(x); }
inline double mag(const std::complex<double>& z) { return std::abs(z); }

template <class T>
struct PartialSum {
    T value{};
    double err = 0.0;       // heuristic absolute error of `value`
    std::int64_t n_used = 0;
    bool converged = false;
    bool decaying = true;   // false when the terms show no decay within caps
    bool skipped = false;   // shell contributed exactly 0 because its weights vanish
};

/// Adaptive 1-D summation of f(1) + f(2) + ...
///
/// Stops on a geometric tail bound when the terms decay fast, or on a fitted
/// power-law tail correction at doubling checkpoints when the decay is
/// polynomial (1/n^s shells). Stopping: estimated remaining error below
/// max(eps_abs, eps_rel * |partial|). Fully deterministic.
template <class T, class F>
PartialSum<T> adaptive_sum(F&& f, double eps_abs, double eps_rel, std::int64_t n_cap) {
    PartialSum<T> out;
    T acc{};
    T comp{};  // Kahan compensation: late tiny terms sit below the accumulator ulp
    double prev_mag = std::numeric_limits<double>::infinity();
    double last_nonzero = 0.0;
    int small_streak = 0, zero_streak = 0, grow_streak = 0;

    std::int64_t next_ck = 16;
    std::int64_t ck_n = 0;      // index of the previous checkpoint
    double ck_term_mag = 0.0;   // |term| there
    T last_term{};
    double tail_err = std::numeric_limits<double>::infinity();
    bool have_corrected = false;
    T prev_corrected{};

    auto eps = [&]() { return std::max(eps_abs, eps_rel * mag(acc)); };

    for (std::int64_t n = 1; n <= n_cap; ++n) {
        T t = f(n);
        T y = t - comp;
        T tmp = acc + y;
        comp = (tmp - acc) - y;
        acc = tmp;
        out.n_used = n;
        double tm = mag(t);

        if (tm == 0.0) {
            if (++zero_streak >= 8) {
                out.value = acc;
                // terms may have quantized to zero rather than truly vanished
                out.err = 4.0 * last_nonzero;
                out.converged = true;
                return out;
            }
            continue;
        }
        zero_streak = 0;
        last_nonzero = tm;

        grow_streak = (tm > prev_mag * 1.0000001) ? grow_streak + 1 : 0;
        if (grow_streak >= 48 && n >= 64) {  // persistent growth: no hope within caps
            out.value = acc;
            out.err = tm * static_cast<double>(n);
            out.converged = false;
            out.decaying = false;
            return out;
        }

        // geometric exit: only when the decay really is geometric (ratio
        // bounded away from 1); polynomial decay is the checkpoint fit's job
        double rho = prev_mag > 0 ? tm / prev_mag : 1.0;
        if (rho <= 0.9) {
            double geo_tail = tm * rho / (1.0 - rho);
            if (geo_tail <= 0.5 * eps())
                ++small_streak;
            else
                small_streak = 0;
            if (small_streak >= 3) {
                out.value = acc;
                out.err = geo_tail;
                out.converged = true;
                return out;
            }
        } else {
            small_streak = 0;
        }
        prev_mag = tm;

        last_term = t;
        if (n == next_ck) {
            if (ck_term_mag > 0.0 && tm > 0.0 && ck_n > 0) {
                double s = std::log(ck_term_mag / tm) / std::log(double(n) / double(ck_n));
                if (s > 1.02 && s < 200.0) {
                    double nn = static_cast<double>(n);
                    double scale = std::pow(nn, s) * std::pow(nn + 0.5, 1.0 - s) / (s - 1.0);
                    T new_tail = t * scale;
                    T corrected = acc + new_tail;
                    if (have_corrected) {
                        double delta = mag(corrected - prev_corrected);
                        tail_err = delta + 2.0 * mag(new_tail) / nn;
                        if (tail_err <= 0.5 * eps()) {
                            out.value = corrected;
                            out.err = tail_err;
                            out.converged = true;
                            return out;
                        }
                    }
                    prev_corrected = corrected;
                    have_corrected = true;
                }
            }
            ck_n = n;
            ck_term_mag = tm;
            next_ck *= 2;
        }
    }

    // cap reached: fit a fresh tail anchored at the final term
    double tm_last = mag(last_term);
    if (ck_n > 0 && ck_n < out.n_used && ck_term_mag > 0.0 && tm_last > 0.0) {
        double s = std::log(ck_term_mag / tm_last) / std::log(double(out.n_used) / double(ck_n));
        if (s > 1.02 && s < 200.0) {
            double nn = static_cast<double>(out.n_used);
            double scale = std::pow(nn, s) * std::pow(nn + 0.5, 1.0 - s) / (s - 1.0);
            T new_tail = last_term * scale;
            out.value = acc + new_tail;
            double delta = have_corrected ? mag(out.value - prev_corrected) : mag(new_tail);
            out.err = delta + 2.0 * mag(new_tail) / nn;
            out.converged = out.err <= eps();
            return out;
        }
    }
    if (ck_n == out.n_used && have_corrected) {  // cap landed exactly on a checkpoint
        out.value = prev_corrected;
        out.err = std::isfinite(tail_err) ? tail_err : mag(prev_corrected - acc);
        out.converged = out.err <= eps();
        return out;
    }
    out.value = acc;
    out.err = prev_mag == std::numeric_limits<double>::infinity()
                  ? 0.0
                  : prev_mag * static_cast<double>(out.n_used);
    out.converged = out.err <= eps();
    return out;
}

}  // namespace detail

}  // namespace multisect

#endif
