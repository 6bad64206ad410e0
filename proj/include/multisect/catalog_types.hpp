#ifndef MULTISECT_CATALOG_TYPES_HPP
#define MULTISECT_CATALOG_TYPES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multisect/policy.hpp"

namespace multisect {

using ParamMap = std::map<std::string, double>;

struct ParamSpec {
    std::string name;
    double def = 0.0;
    double min = 0.0;
    double max = 0.0;  // inclusive range
};

enum class CaseKind { exact_structural, numeric, negative_control };

/// Evaluated pair of sides plus optional diagnostics (structural cases report
/// the first mismatching index here).
struct CasePair {
    EvalResult lhs;
    EvalResult rhs;
    std::string note;
};

/// One catalog entry: a self-verifying identity with parameter schema,
/// tolerance, and an anchor stating the identity it checks.
struct IdentityCase {
    std::string id;
    std::string description;
    std::string anchor;
    std::vector<ParamSpec> params;
    CaseKind kind = CaseKind::numeric;
    double default_tol = 1e-10;
    std::function<CasePair(const ParamMap&, const TruncationPolicy&)> eval;
};

struct VerificationReport {
    std::string id;
    ParamMap params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    int j_used = 0;
    std::int64_t n_used = 0;
    double wall_ms = 0.0;
    std::string note;
};

struct SuiteReport {
    std::vector<VerificationReport> cases;
    bool pass = false;
    double total_wall_ms = 0.0;
};

namespace cases {

/// Closed-form side: converged by construction, ulp-scale error.
inline EvalResult closed_form(double v, double rel_err = 1e-14) {
    EvalResult r;
    r.value = v;
    r.abs_error_estimate = std::abs(v) * rel_err;
    r.converged = true;
    return r;
}

inline double param(const ParamMap& p, const std::string& name) { return p.at(name); }

}  // namespace cases

}  // namespace multisect

#endif
