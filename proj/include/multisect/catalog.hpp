#ifndef MULTISECT_CATALOG_HPP
#define MULTISECT_CATALOG_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multisect/cases/gamma_product_cases.hpp"
#include "multisect/cases/generating_cases.hpp"
#include "multisect/cases/lambert_cases.hpp"
#include "multisect/cases/qpochhammer_cases.hpp"
#include "multisect/cases/structural_cases.hpp"
#include "multisect/cases/application_cases.hpp"
#include "multisect/catalog_types.hpp"

namespace multisect {

/// The enumerated registry of every identity, plus the verification runner.
/// Immutable after construction; verification is stateless and reentrant.
class Catalog {
  public:
    static const Catalog& instance() {
        static Catalog cat;
        return cat;
    }

    std::vector<const IdentityCase*> list() const {
        std::vector<const IdentityCase*> v;
        v.reserve(cases_.size());
        for (const auto& [id, c] : cases_) v.push_back(&c);
        return v;  // std::map iteration: already ordered by id
    }

    const IdentityCase* find(const std::string& id) const {
        auto it = cases_.find(id);
        return it == cases_.end() ? nullptr : &it->second;
    }

    const IdentityCase& at(const std::string& id) const {
        const IdentityCase* c = find(id);
        if (!c) throw std::invalid_argument("unknown case id: " + id);
        return *c;
    }

    /// Resolve parameter overrides against the case's schema (range-checked).
    static ParamMap resolve_params(const IdentityCase& c, const ParamMap& overrides) {
        ParamMap p;
        for (const auto& spec : c.params) p[spec.name] = spec.def;
        for (const auto& [k, v] : overrides) {
            const std::string& name = k;
            auto it = std::find_if(c.params.begin(), c.params.end(),
                                   [&name](const ParamSpec& s) { return s.name == name; });
            if (it == c.params.end())
                throw std::invalid_argument("case " + c.id + " has no parameter '" + name + "'");
            if (v < it->min || v > it->max)
                throw std::invalid_argument("parameter '" + name + "' out of range for " + c.id);
            p[name] = v;
        }
        return p;
    }

    VerificationReport verify(const std::string& id, const ParamMap& overrides = {},
                              const TruncationPolicy& pol = {},
                              std::optional<double> tol_override = {}) const {
        const IdentityCase& c = at(id);
        ParamMap p = resolve_params(c, overrides);
        double tol = tol_override.value_or(c.default_tol);

        VerificationReport rep;
        rep.id = c.id;
        rep.params = p;
        rep.tol = tol;

        auto t0 = std::chrono::steady_clock::now();
        CasePair pair = c.eval(p, pol);
        auto t1 = std::chrono::steady_clock::now();
        rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        rep.lhs = pair.lhs.value;
        rep.rhs = pair.rhs.value;
        rep.note = pair.note;
        rep.j_used = std::max(pair.lhs.j_used, pair.rhs.j_used);
        rep.n_used = std::max(pair.lhs.n_used, pair.rhs.n_used);
        rep.abs_err = std::abs(rep.lhs - rep.rhs);
        double scale = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
        rep.rel_err = scale > 0.0 ? rep.abs_err / scale : 0.0;

        if (c.kind == CaseKind::exact_structural) {
            rep.pass = rep.lhs == rep.rhs && pair.lhs.converged && pair.rhs.converged;
        } else {
            // non-convergence never passes silently
            rep.pass = pair.lhs.converged && pair.rhs.converged && rep.rel_err <= tol;
        }
        return rep;
    }

    /// Run every case (negative controls excluded) at default parameters;
    /// failures are reported, never thrown.
    SuiteReport verify_all(const TruncationPolicy& pol = {}, const std::string& filter = "") const {
        SuiteReport suite;
        suite.pass = true;
        for (const auto& [id, c] : cases_) {
            if (c.kind == CaseKind::negative_control) continue;
            if (!filter.empty() && id.rfind(filter, 0) != 0) continue;
            VerificationReport rep;
            try {
                rep = verify(id, {}, pol);
            } catch (const std::exception& e) {
                rep.id = id;
                rep.tol = c.default_tol;
                rep.pass = false;
                rep.note = std::string("exception: ") + e.what();
            }
            suite.pass = suite.pass && rep.pass;
            suite.total_wall_ms += rep.wall_ms;
            suite.cases.push_back(std::move(rep));
        }
        return suite;
    }

    /// Cartesian sweep over a parameter grid; order-stable, non-aborting.
    std::vector<VerificationReport> sweep(const std::string& id,
                                          const std::map<std::string, std::vector<double>>& grid,
                                          const TruncationPolicy& pol = {}) const {
        const IdentityCase& c = at(id);
        std::vector<ParamMap> points{{}};
        for (const auto& [name, values] : grid) {
            if (values.empty()) throw std::invalid_argument("empty grid for parameter " + name);
            std::vector<ParamMap> next;
            for (const auto& base : points)
                for (double v : values) {
                    ParamMap m = base;
                    m[name] = v;
                    next.push_back(std::move(m));
                }
            points = std::move(next);
        }
        std::vector<VerificationReport> reports;
        reports.reserve(points.size());
        for (const auto& pt : points) {
            try {
                reports.push_back(verify(id, pt, pol));
            } catch (const std::exception& e) {
                VerificationReport rep;
                rep.id = c.id;
                rep.params = pt;
                rep.pass = false;
                rep.note = std::string("exception: ") + e.what();
                reports.push_back(std::move(rep));
            }
        }
        return reports;
    }

    /// Registry self-test: every case states the identity it checks.
    bool anchors_nonempty() const {
        for (const auto& [id, c] : cases_)
            if (c.anchor.empty() || c.description.empty()) return false;
        return true;
    }

  private:
    Catalog() {
        std::vector<IdentityCase> all;
        cases::register_structural_cases(all);
        cases::register_generating_cases(all);
        cases::register_lambert_cases(all);
        cases::register_qpochhammer_cases(all);
        cases::register_application_cases(all);
        cases::register_gamma_product_cases(all);
        for (auto& c : all) {
            if (cases_.count(c.id)) throw std::logic_error("duplicate case id: " + c.id);
            cases_.emplace(c.id, std::move(c));
        }
    }

    std::map<std::string, IdentityCase> cases_;
};

}  // namespace multisect

#endif
