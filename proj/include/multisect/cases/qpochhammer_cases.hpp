#ifndef MULTISECT_CASES_QPOCHHAMMER_CASES_HPP
#define MULTISECT_CASES_QPOCHHAMMER_CASES_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "multisect/catalog_types.hpp"
#include "multisect/special/qseries.hpp"

namespace multisect::cases {

namespace detail {

// log (q^a0 ; q^astep)_inf for 0 < q < 1, exponents as doubles of 2^j scale
inline double log_qp(double q, double a0, double astep) {
    double a = std::pow(q, a0);
    double step = std::pow(q, astep);
    if (a == 0.0) return 0.0;
    return special::log_q_pochhammer(a, step);
}

// sum over j of weight(j) * log-ratio terms, stops once factors hit 1
template <class F>
EvalResult qp_jsum(F&& logterm) {
    double acc = 0.0;
    int j = 0, tiny = 0;
    for (; j < 64; ++j) {
        double t = logterm(j);
        acc += t;
        if (std::abs(t) < 1e-18 * std::max(std::abs(acc), 1e-300)) {
            if (++tiny >= 2) break;
        } else {
            tiny = 0;
        }
    }
    EvalResult r;
    r.value = std::exp(acc);
    r.j_used = j;
    r.abs_error_estimate = 3e-15 * std::abs(r.value);
    r.converged = true;
    return r;
}

}  // namespace detail

inline void register_qpochhammer_cases(std::vector<IdentityCase>& out) {
    using detail::log_qp;
    using detail::qp_jsum;

    auto euler_rhs = [](double q) {
        return closed_form(std::exp(special::log_q_pochhammer(q, q)), 3e-15);
    };

    {
        IdentityCase c;
        c.id = "D1.qp-2j";
        c.description = "prod_j ((q^{2^j};q^{2^{j+1}})/(q^{2^{j+1}};q^{2^{j+1}}))^{2^j} = (q;q)";
        c.anchor = "prod_j ((q^{2^j};q^{2^{j+1}})/(q^{2^{j+1}};q^{2^{j+1}}))^{2^j} = (q;q)";
        c.params = {{"q", 0.2, 0.0, 0.9}};
        c.default_tol = 1e-12;
        c.eval = [euler_rhs](const ParamMap& p, const TruncationPolicy&) {
            double q = param(p, "q");
            CasePair out;
            out.lhs = qp_jsum([q](int j) {
                double p1 = std::ldexp(1.0, j), p2 = std::ldexp(1.0, j + 1);
                return std::ldexp(log_qp(q, p1, p2) - log_qp(q, p2, p2), j);
            });
            out.rhs = euler_rhs(q);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D2.qp-p";
        c.description = "general exponent p: prod_j ((q^{2^j};q^{2^{j+1}})/(q^{2^{j+1}};q^{2^{j+1}})^{p-1})^{p^j}";
        c.anchor = "prod_j ((q^{2^j};q^{2^{j+1}})/(q^{2^{j+1}};q^{2^{j+1}})^{p-1})^{p^j} = (q;q)";
        c.params = {{"q", 0.2, 0.0, 0.9}, {"p", 3.0, -4.0, 4.0}};
        c.default_tol = 1e-12;
        c.eval = [euler_rhs](const ParamMap& pm, const TruncationPolicy&) {
            double q = param(pm, "q"), pp = param(pm, "p");
            CasePair out;
            out.lhs = qp_jsum([q, pp](int j) {
                double p1 = std::ldexp(1.0, j), p2 = std::ldexp(1.0, j + 1);
                return std::pow(pp, j) * (log_qp(q, p1, p2) - (pp - 1.0) * log_qp(q, p2, p2));
            });
            out.rhs = euler_rhs(q);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D3.qp-base3-p";
        c.description = "base-3 variant with exponent p";
        c.anchor = "prod_j ((q^{3^j};q^{3^{j+1}})(q^{2 3^j};q^{3^{j+1}})/(q^{3^{j+1}};q^{3^{j+1}})^{p-1})^{p^j} = (q;q)";
        c.params = {{"q", 0.2, 0.0, 0.9}, {"p", 2.0, -4.0, 4.0}};
        c.default_tol = 1e-12;
        c.eval = [euler_rhs](const ParamMap& pm, const TruncationPolicy&) {
            double q = param(pm, "q"), pp = param(pm, "p");
            CasePair out;
            out.lhs = qp_jsum([q, pp](int j) {
                double t1 = std::pow(3.0, j), t2 = 3.0 * t1;
                return std::pow(pp, j) *
                       (log_qp(q, t1, t2) + log_qp(q, 2.0 * t1, t2) - (pp - 1.0) * log_qp(q, t2, t2));
            });
            out.rhs = euler_rhs(q);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D4.qp-p1";
        c.description = "p = 1: prod_j (q^{2^j}; q^{2^{j+1}}) = (q;q)";
        c.anchor = "prod_j (q^{2^j};q^{2^{j+1}}) = (q;q)";
        c.params = {{"q", 0.2, 0.0, 0.9}};
        c.default_tol = 1e-12;
        c.eval = [euler_rhs](const ParamMap& pm, const TruncationPolicy&) {
            double q = param(pm, "q");
            CasePair out;
            out.lhs = qp_jsum([q](int j) {
                return log_qp(q, std::ldexp(1.0, j), std::ldexp(1.0, j + 1));
            });
            out.rhs = euler_rhs(q);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D5.qp-base3-p1";
        c.description = "base-3, p = 1 specialization";
        c.anchor = "prod_j (q^{3^j};q^{3^{j+1}})(q^{2 3^j};q^{3^{j+1}}) = (q;q)";
        c.params = {{"q", 0.2, 0.0, 0.9}};
        c.default_tol = 1e-12;
        c.eval = [euler_rhs](const ParamMap& pm, const TruncationPolicy&) {
            double q = param(pm, "q");
            CasePair out;
            out.lhs = qp_jsum([q](int j) {
                double t1 = std::pow(3.0, j), t2 = 3.0 * t1;
                return log_qp(q, t1, t2) + log_qp(q, 2.0 * t1, t2);
            });
            out.rhs = euler_rhs(q);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D6.qp-general-a";
        c.description = "prod_j ((a q^{2^j-1};q^{2^{j+1}})/(a q^{2^{j+1}-1};q^{2^{j+1}}))^{2^j} = (a;q)";
        c.anchor = "prod_j ((a q^{2^j-1};q^{2^{j+1}})/(a q^{2^{j+1}-1};q^{2^{j+1}}))^{2^j} = (a;q)";
        c.params = {{"a", 0.3, 0.0, 0.9}, {"q", 0.2, 0.0, 0.9}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& pm, const TruncationPolicy&) {
            double a = param(pm, "a"), q = param(pm, "q");
            CasePair out;
            out.lhs = detail::qp_jsum([a, q](int j) {
                double p1 = std::ldexp(1.0, j), p2 = std::ldexp(1.0, j + 1);
                double step = std::pow(q, p2);
                double a1 = a * std::pow(q, p1 - 1.0);
                double a2 = a * std::pow(q, p2 - 1.0);
                double l1 = a1 > 0.0 ? special::log_q_pochhammer(a1, step) : 0.0;
                double l2 = a2 > 0.0 ? special::log_q_pochhammer(a2, step) : 0.0;
                return std::ldexp(l1 - l2, j);
            });
            out.rhs = closed_form(std::exp(special::log_q_pochhammer(a, q)), 3e-15);
            return out;
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "D7.partition-census";
        c.description = "coefficients of prod_j 1/(q^{2^j};q^{2^{j+1}}) reproduce p(n), n <= 30";
        c.anchor = "coefficients of prod_j 1/(q^{2^j};q^{2^{j+1}}) equal the partition counts p(n)";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"n_max", 30, 1, 200}};
        c.eval = [](const ParamMap& pm, const TruncationPolicy&) {
            int N = static_cast<int>(param(pm, "n_max"));
            // factored form: parts with nu2(part) = j for each level j
            std::vector<std::int64_t> coeff(static_cast<std::size_t>(N) + 1, 0);
            coeff[0] = 1;
            for (int j = 0; (std::int64_t(1) << j) <= N; ++j) {
                std::int64_t start = std::int64_t(1) << j, step = start * 2;
                for (std::int64_t part = start; part <= N; part += step)
                    for (std::int64_t n = part; n <= N; ++n)
                        coeff[static_cast<std::size_t>(n)] +=
                            coeff[static_cast<std::size_t>(n - part)];
            }
            // oracle: classic partition DP over all parts 1..N
            std::vector<std::int64_t> pn(static_cast<std::size_t>(N) + 1, 0);
            pn[0] = 1;
            for (int part = 1; part <= N; ++part)
                for (int n = part; n <= N; ++n)
                    pn[static_cast<std::size_t>(n)] += pn[static_cast<std::size_t>(n - part)];
            bool ok = coeff == pn;
            CasePair out;
            out.lhs = closed_form(ok ? 0.0 : 1.0, 0.0);
            out.rhs = closed_form(0.0, 0.0);
            if (!ok) out.note = "partition count mismatch";
            return out;
        };
        out.push_back(c);
    }
}

}  // namespace multisect::cases

#endif
