#ifndef MULTISECT_CASES_STRUCTURAL_CASES_HPP
#define MULTISECT_CASES_STRUCTURAL_CASES_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "multisect/catalog_types.hpp"
#include "multisect/census.hpp"
#include "multisect/engine.hpp"
#include "multisect/structural.hpp"
#include "multisect/weight_scheme.hpp"

namespace multisect::cases {

namespace detail {

inline CasePair run_structural(const WeightScheme& scheme, std::int64_t N) {
    auto rep = structural_check(scheme, N);
    CasePair out;
    out.lhs = closed_form(rep.pass ? 0.0 : 1.0, 0.0);
    out.rhs = closed_form(0.0, 0.0);
    out.lhs.n_used = rep.tuples;
    if (!rep.pass && rep.first_mismatch)
        out.note = "first_mismatch=" + std::to_string(*rep.first_mismatch);
    return out;
}

// structural evaluator over a scheme factory taking (base)
template <class MakeScheme>
IdentityCase structural_case(std::string id, std::string description, std::string anchor,
                             MakeScheme make, double def_base, double def_N) {
    IdentityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.anchor = std::move(anchor);
    c.kind = CaseKind::exact_structural;
    c.default_tol = 0.0;  // exact
    c.params = {{"base", def_base, 2, 16}, {"N", def_N, 1, 2e6}};
    c.eval = [make](const ParamMap& p, const TruncationPolicy&) {
        auto scheme = make(static_cast<std::int64_t>(param(p, "base")));
        return run_structural(scheme, static_cast<std::int64_t>(param(p, "N")));
    };
    return c;
}

inline WeightScheme corrupted_two_pow(std::int64_t base) {
    WeightScheme s = scheme_two_pow(base);
    auto chi = s.chi_exact;
    s.chi_exact = [chi](int j) -> Rational { return j == 0 ? chi(0) + Rational(1) : chi(j); };
    auto bad = s.chi_exact;
    s.chi = [bad](int j) { return to_double(bad(j)); };
    return s;
}

}  // namespace detail

inline void register_structural_cases(std::vector<IdentityCase>& out) {
    using detail::structural_case;

    out.push_back(structural_case(
        "A1.general-2j", "2^j-weighted dissection: exponent bookkeeping collapses to weight 1",
        "prod_{j,n} (a_{(2n-1)2^j}/a_{(2n)2^j})^{2^j} = prod_m a_m",
        [](std::int64_t b) { return scheme_two_pow(b); }, 2, 4096));

    {
        IdentityCase c;
        c.id = "A1.tan-product";
        c.description = "prod_j (tan(a/2^j)/(a/2^j))^(2^(j-1)) = a/sin(a)";
        c.anchor = "prod_{j>=1} (tan(a/2^j)/(a/2^j))^{2^{j-1}} = a/sin(a)";
        c.kind = CaseKind::numeric;
        c.default_tol = 1e-10;
        c.params = {{"a", 1.0, 1e-6, 3.0}};
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            double a = param(p, "a");
            double logsum = 0.0;
            int j = 1;
            for (; j <= std::min(pol.j_max_cap, 40); ++j) {
                double x = std::ldexp(a, -j);
                // log(tan x / x) with a series fallback where tan x - x cancels
                double t;
                if (std::abs(x) < 0.05) {
                    double x2 = x * x;
                    t = std::log1p(x2 / 3.0 + 2.0 * x2 * x2 / 15.0 + 17.0 * x2 * x2 * x2 / 315.0);
                } else {
                    t = std::log(std::tan(x) / x);
                }
                double term = std::ldexp(t, j - 1);
                logsum += term;
                if (std::abs(term) < 1e-16 * std::abs(logsum) && j > 4) break;
            }
            CasePair out;
            out.lhs = EvalResult{std::exp(logsum), std::abs(std::exp(logsum)) * 1e-13, j, 0, true};
            out.rhs = closed_form(a / std::sin(a));
            return out;
        };
        out.push_back(c);
    }

    {
        // q is restricted to dyadic values so the double -> exact-rational
        // conversion is lossless and the oracle stays exact
        IdentityCase c;
        c.id = "A2.q-case";
        c.description = "q-parameterized dissection (phi=q^j, chi=(1-q)q^j), weight 1";
        c.anchor = "prod_{j,n} (a_{(2n-1)2^j}/a_{(2n)2^j}^{q-1})^{q^j} = prod_m a_m";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"q", 2.0, -8.0, 8.0}, {"base", 2, 2, 16}, {"N", 4096, 1, 2e6}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            Rational q(param(p, "q"));  // exact for dyadic doubles
            q.canonicalize();
            auto scheme = scheme_q_power(q, static_cast<std::int64_t>(param(p, "base")));
            return detail::run_structural(scheme, static_cast<std::int64_t>(param(p, "N")));
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "A2.q-case-numeric";
        c.description = "q-dissection of b_m = 2^-m sums to 1 for any q";
        c.anchor = "sum_{j,n} q^j b_{(2n-1)2^j} - q^j(q-1) b_{(2n)2^j} = sum_m b_m";
        c.params = {{"q", 0.5, -4.0, 4.0}};
        c.default_tol = 1e-11;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            SequenceOracle seq{[](std::int64_t m) { return std::pow(0.5, double(m)); }, nullptr};
            auto [lhs, rhs] = eval_q_multisection(seq, param(p, "q"), 2, MultisectionMode::sum, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }

    out.push_back(structural_case(
        "A3.base3-q", "base-3 q-corollary bookkeeping",
        "prod_{j,n} (a_{(3n-1)3^j} a_{(3n-2)3^j}/a_{(3n)3^j}^{q-1})^{q^j} = prod_m a_m",
        [](std::int64_t) { return scheme_q_power(rational(2), 3); }, 3, 2187));

    out.push_back(structural_case(
        "A4.base-b", "arbitrary-base q-proposition bookkeeping",
        "prod_{j,n} (prod_{k<b} a_{(bn-k)b^j}/a_{(bn)b^j}^{q-1})^{q^j} = prod_m a_m",
        [](std::int64_t b) { return scheme_q_power(rational(1, 2), b); }, 5, 4096));

    out.push_back(structural_case(
        "A5.phi-chi-j", "phi = chi = j: cumulative weight nu(nu+1)/2",
        "collected exponent of a_m equals nu(nu+1)/2 for phi = chi = j",
        [](std::int64_t b) { return scheme_phi_chi_j(b); }, 2, 4096));

    out.push_back(structural_case(
        "A5.phi-j-chi-2j", "phi = j, chi = 2j: cumulative weight nu^2",
        "collected exponent of a_m equals nu^2 for phi = j, chi = 2j",
        [](std::int64_t b) { return scheme_j_2j(b); }, 2, 4096));

    out.push_back(structural_case(
        "A5.ones", "phi = chi = 1: cumulative weight nu+1",
        "collected exponent of a_m equals nu+1 for phi = chi = 1",
        [](std::int64_t b) { return scheme_ones(b); }, 2, 4096));

    {
        IdentityCase c;
        c.id = "A5.bernoulli";
        c.description = "Bernoulli pair phi=-B_{2p+1}(j)/(2p+1), chi=j^{2p}: weight 0";
        c.anchor = "phi = -B_{2p+1}(j)/(2p+1), chi = j^{2p} collects exponent 0 on every a_m";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"p", 1, 1, 6}, {"N", 4096, 1, 2e6}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            auto rep = bernoulli_weight_check(static_cast<int>(param(p, "p")),
                                              static_cast<std::int64_t>(param(p, "N")));
            CasePair out;
            out.lhs = closed_form(rep.pass ? 0.0 : 1.0, 0.0);
            out.rhs = closed_form(0.0, 0.0);
            if (!rep.pass && rep.first_mismatch)
                out.note = "first_mismatch=" + std::to_string(*rep.first_mismatch);
            return out;
        };
        out.push_back(c);
    }

    out.push_back(structural_case(
        "A6.ex312", "phi = -j^2+j+1, chi = 2j: weight 1",
        "phi = -j^2+j+1, chi = 2j collects exponent 1 on every a_m",
        [](std::int64_t b) { return scheme_ex312(b); }, 2, 1024));

    out.push_back(structural_case(
        "A7.telescoping", "phi = 1/(j+1), chi = 1/((j+1)(j+2)): weight 1",
        "phi = 1/(j+1), chi = 1/((j+1)(j+2)) collects exponent 1",
        [](std::int64_t b) { return scheme_telescoping(b); }, 2, 4096));

    out.push_back(structural_case(
        "A7.telescoping-base3", "base-3 telescoping variant",
        "base-3 variant of the order-2 telescoping pair, exponent 1",
        [](std::int64_t) { return scheme_telescoping(3); }, 3, 2187));

    out.push_back(structural_case(
        "A8.fourth-choice", "phi = 1-j(j+3)/(4(j+1)(j+2)), chi = 1/((j+1)(j+2)(j+3)): weight 1",
        "phi = 1-j(j+3)/(4(j+1)(j+2)), chi = 1/((j+1)(j+2)(j+3)), exponent 1",
        [](std::int64_t b) { return scheme_fourth_choice(b); }, 2, 1024));

    {
        IdentityCase c;
        c.id = "A9.finite-version";
        c.description = "finite-J split: {(2n-1)2^j, j>=J} = {p 2^J} and the complement";
        c.anchor = "{(2n-1)2^j : j>=J} = {p 2^J} and {j<J} = {p != 0 mod 2^J} as multisets";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"J", 2, 1, 20}, {"N", 4096, 1, 2e6}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            auto r = finite_census(static_cast<int>(param(p, "J")),
                                   static_cast<std::int64_t>(param(p, "N")));
            bool ok = r.high_factored == r.high_arithmetic && r.low_factored == r.low_arithmetic;
            CasePair out;
            out.lhs = closed_form(ok ? 0.0 : 1.0, 0.0);
            out.rhs = closed_form(0.0, 0.0);
            if (!ok) out.note = "finite census mismatch";
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "A10.double-sum";
        c.description = "four-fold dyadic multisection of b_{p,q} = x^{pq}";
        c.anchor = "sum_{p,q} b_{p,q} = sum_{j,k,n,m} 2^{j+k} [b_oo + b_ee - b_eo - b_oe]";
        c.params = {{"x", 0.3, 1e-6, 0.8}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            double x = param(p, "x");
            auto b = [x](std::int64_t pp, std::int64_t qq) {
                return std::pow(x, double(pp) * double(qq));
            };
            auto [lhs, rhs] = eval_double_multisection(b, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "A1.pairwise-symmetric";
        c.description = "degree-2 symmetric form agrees on C u D vs N u E (exact)";
        c.anchor = "sum_{n1<n2} b_{n1} b_{n2} over C_b u D_b = same over N u E_b";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"base", 2, 2, 7}, {"N", 64, 1, 512}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            auto rep = pairwise_symmetric_check(
                static_cast<std::int64_t>(param(p, "base")),
                static_cast<std::int64_t>(param(p, "N")),
                [](std::int64_t m) { return rational(1, static_cast<long>(m)); });
            CasePair out;
            out.lhs = closed_form(rep.pass ? 0.0 : 1.0, 0.0);
            out.rhs = closed_form(0.0, 0.0);
            return out;
        };
        out.push_back(c);
    }

    // negative controls: these are REQUIRED to fail; excluded from verify_all
    {
        IdentityCase c;
        c.id = "Z1.negative-control-structural";
        c.description = "chi(0) perturbed by +1: the oracle must flag m = base";
        c.anchor = "chi(0)+1 must be caught by both oracles";
        c.kind = CaseKind::negative_control;
        c.default_tol = 0.0;
        c.params = {{"base", 2, 2, 7}, {"N", 512, 2, 1e5}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            auto scheme = detail::corrupted_two_pow(static_cast<std::int64_t>(param(p, "base")));
            return detail::run_structural(scheme, static_cast<std::int64_t>(param(p, "N")));
        };
        out.push_back(c);
    }
    {
        IdentityCase c;
        c.id = "Z1.negative-control-numeric";
        c.description = "chi(0) perturbed by +1: numeric sides must disagree";
        c.anchor = "chi(0)+1 must be caught by both oracles";
        c.kind = CaseKind::negative_control;
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap&, const TruncationPolicy& pol) {
            auto scheme = detail::corrupted_two_pow(2);
            SequenceOracle seq{[](std::int64_t m) { return std::pow(0.5, double(m)); }, nullptr};
            auto [lhs, rhs] = eval_multisection_sum(seq, scheme, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }
}

}  // namespace multisect::cases

#endif
