#ifndef MULTISECT_REPORT_IO_HPP
#define MULTISECT_REPORT_IO_HPP

#include <json.hpp>

#include <sstream>
#include <string>

#include "multisect/catalog_types.hpp"

namespace multisect {

/// JSON for a single report. Timing is zeroed unless requested so that
/// identical invocations yield byte-identical documents.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r, bool timing = false) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["j_used"] = r.j_used;
    j["n_used"] = r.n_used;
    j["wall_ms"] = timing ? r.wall_ms : 0.0;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::ordered_json suite_to_json(const SuiteReport& s, bool timing = false) {
    nlohmann::ordered_json j;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& r : s.cases) j["cases"].push_back(report_to_json(r, timing));
    j["pass"] = s.pass;
    j["total_wall_ms"] = timing ? s.total_wall_ms : 0.0;
    return j;
}

inline std::string csv_header() {
    return "id,params,lhs,rhs,abs_err,rel_err,tol,pass,j_used,n_used,wall_ms";
}

inline std::string report_to_csv_row(const VerificationReport& r, bool timing = false) {
    std::ostringstream os;
    os.precision(17);
    os << r.id << ",\"";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ';';
        os << k << '=' << v;
        first = false;
    }
    os << "\"," << r.lhs << ',' << r.rhs << ',' << r.abs_err << ',' << r.rel_err << ',' << r.tol
       << ',' << (r.pass ? "true" : "false") << ',' << r.j_used << ',' << r.n_used << ','
       << (timing ? r.wall_ms : 0.0);
    return os.str();
}

inline std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os.precision(15);
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
    if (!r.params.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) os << ", ";
            os << k << '=' << v;
            first = false;
        }
        os << ")";
    }
    os << "  lhs=" << r.lhs << "  rhs=" << r.rhs << "  rel_err=" << r.rel_err
       << "  tol=" << r.tol;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    return os.str();
}

}  // namespace multisect

#endif
