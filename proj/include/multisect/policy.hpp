#ifndef MULTISECT_POLICY_HPP
#define MULTISECT_POLICY_HPP

#include <cstdint>
#include <stdexcept>

namespace multisect {

/// Knobs for the adaptive series/product engine.
struct TruncationPolicy {
    double target_rel_tol = 1e-10;
    int j_max_cap = 64;
    std::int64_t n_max_cap = 1'000'000;
    enum class TailRule { geometric_ratio, fixed_caps };
    TailRule tail_rule = TailRule::geometric_ratio;
    // binary64 is the only backend in v1; `extended` is reserved for a
    // double-word fallback should a tolerance ever demand it
    enum class Precision { binary64, extended };
    Precision working_precision = Precision::binary64;

    void validate() const {
        if (!(target_rel_tol > 0)) throw std::domain_error("policy: target_rel_tol must be > 0");
        if (j_max_cap < 1 || n_max_cap < 1) throw std::domain_error("policy: caps must be >= 1");
    }
};

struct EvalResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int j_used = 0;
    std::int64_t n_used = 0;
    bool converged = false;
};

}  // namespace multisect

#endif
