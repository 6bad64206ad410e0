#ifndef MULTISECT_CASES_LAMBERT_CASES_HPP
#define MULTISECT_CASES_LAMBERT_CASES_HPP

#include <vector>

#include "multisect/catalog_types.hpp"
#include "multisect/engine.hpp"

namespace multisect::cases {

inline void register_lambert_cases(std::vector<IdentityCase>& out) {
    {
        IdentityCase c;
        c.id = "C1.lambert-mu1";
        c.description = "f(q) = sum_{j,k} 2^{2j+k} [g(q^{2^{j+k}}) - 4 g(q^{2^{j+k+1}})]";
        c.anchor = "sum n q^n/(1-q^n) = sum_{j,k} 2^{2j+k}[g(q^{2^{j+k}}) - 4 g(q^{2^{j+k+1}})]";
        c.params = {{"q", 0.25, 1e-9, 0.9}};
        c.default_tol = 1e-11;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            auto rep = lambert_relation_check(1, param(p, "q"), pol);
            CasePair out;
            out.lhs = closed_form(rep.lhs, 1e-14);
            out.rhs = closed_form(rep.rhs, 1e-14);
            out.rhs.converged = rep.converged;
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "C2.lambert-mu";
        c.description = "mu-generalization with weight 2^{(mu+1)j+k} and 2^{mu+1} inner shift";
        c.anchor = "sum n^mu q^n/(1-q^n) = sum_{j,k} 2^{(mu+1)j+k}[g(q^{2^{j+k}}) - 2^{mu+1} g(q^{2^{j+k+1}})]";
        c.params = {{"mu", 2, 1, 6}, {"q", 0.5, 1e-9, 0.9}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            auto rep =
                lambert_relation_check(static_cast<int>(param(p, "mu")), param(p, "q"), pol);
            CasePair out;
            out.lhs = closed_form(rep.lhs, 1e-14);
            out.rhs = closed_form(rep.rhs, 1e-14);
            out.rhs.converged = rep.converged;
            return out;
        };
        out.push_back(c);
    }
}

}  // namespace multisect::cases

#endif
