#ifndef MULTISECT_CASES_GENERATING_CASES_HPP
#define MULTISECT_CASES_GENERATING_CASES_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "multisect/catalog_types.hpp"
#include "multisect/engine.hpp"
#include "multisect/special/zeta.hpp"

namespace multisect::cases {

namespace detail {

// sum over j >= j0 of f(j), doubly-exponential or geometric decay assumed
template <class F>
EvalResult dyadic_jsum(F&& f, int j0 = 0, int cap = 200) {
    double acc = 0.0;
    int tiny = 0, j = j0;
    for (; j < cap; ++j) {
        double t = f(j);
        acc += t;
        if (std::abs(t) <= 1e-17 * std::max(std::abs(acc), 1e-300)) {
            if (++tiny >= 3) break;
        } else {
            tiny = 0;
        }
    }
    EvalResult r;
    r.value = acc;
    r.j_used = j;
    r.abs_error_estimate = 2e-15 * std::abs(acc);
    r.converged = true;
    return r;
}

}  // namespace detail

inline void register_generating_cases(std::vector<IdentityCase>& out) {
    constexpr double pi = std::numbers::pi;

    {
        IdentityCase c;
        c.id = "B1.t-series";
        c.description = "sum_j phi(j) t^{2^j}/(1-t^{2^{j+1}}) = sum_m phi(nu2(m)) t^m, phi(j)=j";
        c.anchor = "sum_j phi(j) t^{2^j}/(1-t^{2^{j+1}}) = sum_m phi(nu2(m)) t^m";
        c.params = {{"t", 0.35, -0.95, 0.95}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            GeneratingParams gp;
            gp.t = param(p, "t");
            auto [lhs, rhs] =
                generating_identities([](int j) { return double(j); }, GeneratingVariant::t_series,
                                      gp, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B2.dirichlet";
        c.description = "(1-2^-s) zeta(s) sum_j j 2^{-sj} = sum_m nu2(m)/m^s = zeta(s)/(2^s-1)";
        c.anchor = "(1-2^{-s}) zeta(s) sum_j phi(j) 2^{-sj} = sum_m phi(nu2(m))/m^s";
        c.params = {{"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            GeneratingParams gp;
            gp.s = param(p, "s");
            auto [lhs, rhs] = generating_identities([](int j) { return double(j); },
                                                    GeneratingVariant::dirichlet, gp, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B3.cos-dirichlet";
        c.description = "sum_m cos(2 pi x nu2(m))/m^s against its zeta closed form";
        c.anchor = "sum_m cos(2 pi x nu2(m))/m^s = (2^s-1)/2^{s+1} (cos-2^s)/(cos-(2^s+2^{-s})/2) zeta(s)";
        c.params = {{"x", 0.3, 0.0, 1.0}, {"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [pi](const ParamMap& p, const TruncationPolicy& pol) {
            double x = param(p, "x"), s = param(p, "s");
            auto w = [x, pi](int nu) { return std::cos(2.0 * pi * x * nu); };
            CasePair out;
            out.lhs = weighted_dirichlet_sum(w, s, pol);
            double cc = std::cos(2.0 * pi * x);
            double p2 = std::pow(2.0, s);
            out.rhs = closed_form((p2 - 1.0) / (2.0 * p2) * (cc - p2) /
                                  (cc - (p2 + 1.0 / p2) / 2.0) * special::riemann_zeta(s));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B4.cos-quarter";
        c.description = "sum_m cos(pi nu2(m)/2)/m^s = (4^s-2^s)/(4^s+1) zeta(s)";
        c.anchor = "sum_m cos(pi nu2(m)/2)/m^s = (4^s-2^s)/(4^s+1) zeta(s)";
        c.params = {{"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [pi](const ParamMap& p, const TruncationPolicy& pol) {
            double s = param(p, "s");
            auto w = [pi](int nu) { return std::cos(pi * nu / 2.0); };
            CasePair out;
            out.lhs = weighted_dirichlet_sum(w, s, pol);
            double p2 = std::pow(2.0, s), p4 = std::pow(4.0, s);
            out.rhs = closed_form((p4 - p2) / (p4 + 1.0) * special::riemann_zeta(s));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B5.alternating-nu";
        c.description = "sum_m (-1)^{nu2(m)}/m^s = (2^s-1)/(2^s+1) zeta(s)  (pi^2/10 at s=2)";
        c.anchor = "sum_m (-1)^{nu2(m)}/m^s = (2^s-1)/(2^s+1) zeta(s)";
        c.params = {{"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            double s = param(p, "s");
            auto w = [](int nu) { return nu % 2 == 0 ? 1.0 : -1.0; };
            CasePair out;
            out.lhs = weighted_dirichlet_sum(w, s, pol);
            double p2 = std::pow(2.0, s);
            out.rhs = closed_form((p2 - 1.0) / (p2 + 1.0) * special::riemann_zeta(s));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B6.t-nu-dirichlet";
        c.description = "sum_m t^{nu2(m)}/m^s = (2^s-1)/(2^s-t) zeta(s)";
        c.anchor = "sum_m t^{nu2(m)}/m^s = (2^s-1)/(2^s-t) zeta(s)";
        c.params = {{"t", 0.4, -2.0, 2.0}, {"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy& pol) {
            GeneratingParams gp;
            gp.t = param(p, "t");
            gp.s = param(p, "s");
            auto [lhs, rhs] = generating_identities(nullptr, GeneratingVariant::chi_series, gp, pol);
            return CasePair{lhs, rhs, ""};
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B7.even-part-cos";
        c.description = "sum_m cos(2 pi x nu2(2m))/(2m)^s against the even-part closed form";
        c.anchor = "sum_m cos(2 pi x nu2(2m))/(2m)^s = -(cos(2^s-1)-1+2^{-s}) zeta(s)/(2 cos 2^s-4^s-1)";
        c.params = {{"x", 0.25, 0.0, 1.0}, {"s", 2.0, 1.1, 30.0}};
        c.default_tol = 1e-10;
        c.eval = [pi](const ParamMap& p, const TruncationPolicy& pol) {
            double x = param(p, "x"), s = param(p, "s");
            // sum over even m' = 2m: equals 2^-s sum_m w(nu2(m)+1)/m^s
            auto w = [x, pi](int nu) { return std::cos(2.0 * pi * x * (nu + 1)); };
            CasePair out;
            EvalResult inner = weighted_dirichlet_sum(w, s, pol);
            out.lhs = inner;
            out.lhs.value = inner.value * std::pow(2.0, -s);
            out.lhs.abs_error_estimate = inner.abs_error_estimate * std::pow(2.0, -s);
            double cc = std::cos(2.0 * pi * x);
            double p2 = std::pow(2.0, s), p4 = std::pow(4.0, s);
            out.rhs = closed_form(-(cc * (p2 - 1.0) - 1.0 + 1.0 / p2) * special::riemann_zeta(s) /
                                  (2.0 * cc * p2 - p4 - 1.0));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B8.log2-over-3";
        c.description = "conditionally convergent sum_m cos(pi nu2(2m)/3)/m = ln(2)/3";
        c.anchor = "sum_m cos(pi nu2(2m)/3)/m = ln(2)/3";
        c.params = {};
        c.default_tol = 1e-4;
        c.eval = [](const ParamMap&, const TruncationPolicy& pol) {
            CasePair out;
            out.lhs = conditional_sum_nu_cos(rational(1, 6), pol);
            out.rhs = closed_form(std::log(2.0) / 3.0);
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B9.teixeira";
        c.description = "t/(1-t) = sum_k 2^k t^{2^k}/(1+t^{2^k})";
        c.anchor = "t/(1-t) = sum_k 2^k t^{2^k}/(1+t^{2^k})";
        c.params = {{"t", 0.6, -0.95, 0.95}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double t = param(p, "t");
            CasePair out;
            out.lhs = detail::dyadic_jsum([t](int k) {
                double tp = std::pow(t, std::ldexp(1.0, k));
                return std::ldexp(tp / (1.0 + tp), k);
            });
            out.rhs = closed_form(t / (1.0 - t));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B10.weight-pattern";
        c.description = "partial Teixeira sums weight 1 except 1-2^{J+1} at multiples of 2^{J+1}";
        c.anchor = "partial sums to J weight every n by 1 except 1-2^{J+1} at 2^{J+1} | n";
        c.kind = CaseKind::exact_structural;
        c.default_tol = 0.0;
        c.params = {{"J", 2, 0, 16}};
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            int J = static_cast<int>(param(p, "J"));
            std::int64_t n_max = std::int64_t(1) << (J + 2);
            auto cvec = teixeira_weight_pattern(J, n_max);
            std::int64_t period = std::int64_t(1) << (J + 1);
            bool ok = true;
            std::int64_t first_bad = 0;
            for (std::int64_t n = 1; n <= n_max; ++n) {
                std::int64_t want = (n % period == 0) ? 1 - period : 1;
                if (cvec[static_cast<std::size_t>(n)] != want) {
                    ok = false;
                    first_bad = n;
                    break;
                }
            }
            CasePair out;
            out.lhs = closed_form(ok ? 0.0 : 1.0, 0.0);
            out.rhs = closed_form(0.0, 0.0);
            if (!ok) out.note = "first mismatch at n=" + std::to_string(first_bad);
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B11.q-teixeira";
        c.description = "z/(1-z) = sum_k q^k (z^{2^k}-(q-1) z^{2^{k+1}})/(1-z^{2^{k+1}})";
        c.anchor = "z/(1-z) = sum_k q^k (z^{2^k}-(q-1)z^{2^{k+1}})/(1-z^{2^{k+1}})";
        c.params = {{"z", 0.5, -0.9, 0.9}, {"q", 3.0, -8.0, 8.0}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double z = param(p, "z"), q = param(p, "q");
            CasePair out;
            out.lhs = detail::dyadic_jsum([z, q](int k) {
                double z1 = std::pow(z, std::ldexp(1.0, k));
                double z2 = z1 * z1;
                return std::pow(q, k) * (z1 - (q - 1.0) * z2) / (1.0 - z2);
            });
            out.rhs = closed_form(z / (1.0 - z));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B12.base-b-generating";
        c.description = "z/(1-z) = sum_j q^j chi(z^{b^j}) with the base-b chi";
        c.anchor = "z/(1-z) = sum_j q^j (z^{b^j}+...+z^{(b-1)b^j}-(q-1)z^{b^{j+1}})/(1-z^{b^{j+1}})";
        c.params = {{"z", 0.4, -0.9, 0.9}, {"q", 2.0, -8.0, 8.0}, {"b", 3, 2, 8}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double z = param(p, "z"), q = param(p, "q");
            int b = static_cast<int>(param(p, "b"));
            CasePair out;
            out.lhs = detail::dyadic_jsum([z, q, b](int j) {
                double w = std::pow(z, std::pow(double(b), j));
                double num = 0.0, wp = 1.0;
                for (int i = 1; i <= b - 1; ++i) {
                    wp *= w;
                    num += wp;
                }
                wp *= w;  // w^b
                num -= (q - 1.0) * wp;
                return std::pow(q, j) * num / (1.0 - wp);
            }, 0, 64);
            out.rhs = closed_form(z / (1.0 - z));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B13.borwein-eta";
        c.description = "eta(s) sum a_n/n^s = zeta(s) for the dyadic sequence a_{2^l} = 2^l";
        c.anchor = "eta(s) sum_n a_n/n^s = sum_n b_n/n^s with a_{2^l} = 2^l gives zeta(s)";
        c.params = {{"s", 2.0, 1.2, 30.0}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double s = param(p, "s");
            CasePair out;
            EvalResult dser = detail::dyadic_jsum(
                [s](int l) { return std::ldexp(1.0, l) * std::pow(std::ldexp(1.0, l), -s); });
            out.lhs = closed_form(special::dirichlet_eta(s) * dser.value, 1e-13);
            out.lhs.j_used = dser.j_used;
            out.rhs = closed_form(special::riemann_zeta(s));
            return out;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "B13.borwein-lambert";
        c.description = "sum a_n x^n/(1+x^n) = x/(1-x) for the dyadic sequence (Teixeira again)";
        c.anchor = "sum_n a_n x^n/(1+x^n) = sum_n b_n x^n for the dyadic a_n";
        c.params = {{"x", 0.3, -0.9, 0.9}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double x = param(p, "x");
            CasePair out;
            out.lhs = detail::dyadic_jsum([x](int l) {
                double xp = std::pow(x, std::ldexp(1.0, l));
                return std::ldexp(xp / (1.0 + xp), l);
            });
            out.rhs = closed_form(x / (1.0 - x));
            return out;
        };
        out.push_back(c);
    }
}

}  // namespace multisect::cases

#endif
