#ifndef MULTISECT_CASES_GAMMA_PRODUCT_CASES_HPP
#define MULTISECT_CASES_GAMMA_PRODUCT_CASES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "multisect/catalog_types.hpp"
#include "multisect/special/gamma.hpp"

namespace multisect::cases {

namespace gpdetail {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// log f(a, z) = 2 log Gamma(a+1) - log Gamma(a+1-iz) - log Gamma(a+1+iz),
// real for real a, z
inline double log_f(double a, double z) {
    return 2.0 * special::log_gamma(Complex(a + 1.0)).real() -
           2.0 * special::log_gamma(Complex(a + 1.0, z)).real();
}

// log g(a, b, z) through the Gamma quotient; real-valued for the parameter
// ranges used here (square roots come in conjugate pairs when negative)
inline double log_g(double a, double b, double z) {
    Complex s0 = std::sqrt(Complex(a * a - b));
    Complex s1 = std::sqrt(Complex(a * a - b + z));
    Complex acc = std::log(Complex(b) / (b - z));
    acc += special::log_gamma(Complex(a) - s0) + special::log_gamma(Complex(a) + s0);
    acc -= special::log_gamma(Complex(a) - s1) + special::log_gamma(Complex(a) + s1);
    return acc.real();
}

template <class F>
EvalResult jsum(F&& f, int cap = 128) {
    double acc = 0.0;
    int tiny = 0, j = 0;
    bool finished = false;
    for (; j < cap; ++j) {
        double t = f(j);
        acc += t;
        if (std::abs(t) <= 1e-16 * std::max(std::abs(acc), 1e-300)) {
            if (++tiny >= 3) {
                finished = true;
                break;
            }
        } else {
            tiny = 0;
        }
    }
    EvalResult r;
    r.value = acc;
    r.j_used = j;
    r.abs_error_estimate = 5e-14 * std::max(std::abs(acc), 1.0);
    r.converged = finished;
    return r;
}

}  // namespace gpdetail

inline void register_gamma_product_cases(std::vector<IdentityCase>& out) {
    using namespace gpdetail;

    {
        IdentityCase c;
        c.id = "F1.gamma-ratio";
        c.description = "f(a,z) = prod_j f(a/2^{j+1} - 1/2, z/2^{j+1}) for the Gamma-square ratio";
        c.anchor = "f(a,z) = prod_j f(a/2^{j+1}-1/2, z/2^{j+1}), f = Gamma^2(a+1)/|Gamma(a+1+iz)|^2";
        c.params = {{"a", 1.0, 0.0, 8.0}, {"z", 1.0, 1e-3, 8.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double a = param(p, "a"), z = param(p, "z");
            CasePair outp;
            EvalResult l = jsum([a, z](int j) {
                return log_f(a / std::ldexp(1.0, j + 1) - 0.5, z / std::ldexp(1.0, j + 1));
            });
            outp.lhs = EvalResult{std::exp(l.value), std::exp(l.value) * (l.abs_error_estimate + 1e-13),
                                  l.j_used, 0, l.converged};
            outp.rhs = closed_form(std::exp(log_f(a, z)), 1e-13);
            return outp;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "F2.cosh-product";
        c.description = "sinh(pi z)/(pi z) = prod_j cosh(pi z / 2^{j+1})";
        c.anchor = "sinh(pi z)/(pi z) = prod_j cosh(pi z/2^{j+1})";
        c.params = {{"z", 1.0, 1e-3, 8.0}};
        c.default_tol = 1e-12;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double z = param(p, "z");
            CasePair outp;
            EvalResult l = jsum([z](int j) {
                double y = kPi * z / std::ldexp(1.0, j + 1);
                double s = std::sinh(0.5 * y);
                return y < 1.0 ? std::log1p(2.0 * s * s)
                               : y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
            });
            outp.lhs = EvalResult{std::exp(l.value), std::exp(l.value) * (l.abs_error_estimate + 1e-14),
                                  l.j_used, 0, l.converged};
            outp.rhs = closed_form(std::sinh(kPi * z) / (kPi * z));
            return outp;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "F3.p9a";
        c.description = "Euler sum from d/da: 2^-j-weighted digamma differences";
        c.anchor = "sum_j 2^{-j}(psi(a 2^{-j-1}+1/2) - Re psi(i 2^{-j} x/2+1/2+a 2^{-j-1})) = 2 psi(a+1) - 2 Re psi(ix+a+1)";
        c.params = {{"a", 1.0, 0.0, 8.0}, {"x", 1.0, 0.05, 8.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double a = param(p, "a"), x = param(p, "x");
            CasePair outp;
            outp.lhs = jsum([a, x](int j) {
                double w = std::ldexp(1.0, -j);
                double c0 = a * w / 2.0 + 0.5;
                Complex zc(c0, x * w / 2.0);
                return w * (special::digamma(c0) - special::digamma(zc).real());
            });
            outp.rhs = closed_form(
                2.0 * special::digamma(a + 1.0) -
                    2.0 * special::digamma(Complex(a + 1.0, x)).real(),
                1e-13);
            return outp;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "F3.p9b";
        c.description = "Euler sum from d/dz: 2^-j-weighted imaginary digamma parts";
        c.anchor = "sum_j 2^{-j} Im psi(i 2^{-j} x/2+1/2+a 2^{-j-1}) = 2 Im psi(ix+a+1)";
        c.params = {{"a", 1.0, 0.0, 8.0}, {"x", 1.0, 1e-3, 8.0}};
        c.default_tol = 1e-10;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double a = param(p, "a"), x = param(p, "x");
            CasePair outp;
            outp.lhs = jsum([a, x](int j) {
                double w = std::ldexp(1.0, -j);
                Complex zc(a * w / 2.0 + 0.5, x * w / 2.0);
                return w * special::digamma(zc).imag();
            });
            outp.rhs = closed_form(2.0 * special::digamma(Complex(a + 1.0, x)).imag(), 1e-13);
            return outp;
        };
        out.push_back(c);
    }

    {
        IdentityCase c;
        c.id = "F4.g-product";
        c.description = "g(a,b,z) = prod_j g(a/2^{j+1}-1/2, 1/4 - a/2^{j+1} + b/4^{j+1}, z/4^{j+1})";
        c.anchor = "g(a,b,z) = prod_j g(a/2^{j+1}-1/2, 1/4-a/2^{j+1}+b/4^{j+1}, z/4^{j+1})";
        c.params = {{"a", 2.0, 0.5, 8.0}, {"b", 5.0, 1.0, 32.0}, {"z", 0.5, 1e-3, 4.0}};
        c.default_tol = 1e-8;
        c.eval = [](const ParamMap& p, const TruncationPolicy&) {
            double a = param(p, "a"), b = param(p, "b"), z = param(p, "z");
            CasePair outp;
            outp.lhs = closed_form(std::exp(log_g(a, b, z)), 1e-12);
            EvalResult r = jsum([a, b, z](int j) {
                double h = std::ldexp(1.0, -j - 1);     // 1/2^{j+1}
                double q = std::ldexp(1.0, -2 * j - 2);  // 1/4^{j+1}
                return log_g(a * h - 0.5, 0.25 - a * h + b * q, z * q);
            });
            outp.rhs = EvalResult{std::exp(r.value), std::exp(r.value) * (r.abs_error_estimate + 1e-12),
                                  r.j_used, 0, r.converged};
            return outp;
        };
        out.push_back(c);
    }
}

}  // namespace multisect::cases

#endif
