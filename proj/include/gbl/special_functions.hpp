// special_functions.hpp
// Logarithmic integral Li(x) = int_2^x du/log u for real and complex
// arguments, the exponential integral Ei it reduces to, the convergent
// tail integral int_x^inf du/(u(u^2-1)log u), and the quadrature and
// compensated-summation building blocks they share.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gbl {

inline constexpr double kEulerGamma = 0.57721566490153286;

// -------------------------------------------------------
// Neumaier compensated summation: keeps conditionally convergent
// zero sums reproducible and accurate when accumulated in a fixed
// order.
// -------------------------------------------------------
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// -------------------------------------------------------
// Adaptive Simpson quadrature, absolute tolerance. Works for real
// and complex-valued integrands over a real parameter.
// -------------------------------------------------------
namespace detail {

template <typename F, typename V>
V adaptive_simpson_rec(F&& f, double a, double b, V fa, V fm, V fb, V whole,
                       double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const V flm = f(lm), frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

template <typename F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 52)
    -> decltype(f(a)) {
    using V = decltype(f(a));
    if (a == b) return V{};
    const double m = 0.5 * (a + b);
    const V fa = f(a), fm = f(m), fb = f(b);
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral of f along the straight segment from g to h in the complex
// plane. Caller is responsible for keeping the segment clear of
// singularities of f.
template <typename F>
std::complex<double> integrate_segment(F&& f, std::complex<double> g,
                                       std::complex<double> h, double tol) {
    const std::complex<double> dir = h - g;
    auto param = [&](double t) { return f(g + t * dir); };
    return dir * adaptive_simpson(param, 0.0, 1.0, tol);
}

// -------------------------------------------------------
// Exponential integral Ei.
//
// Regions (validated against each other in the test suite):
//   power series        gamma + log w + sum w^k/(k k!)   for small |w|,
//                       extended along the positive real direction where
//                       the series suffers no cancellation;
//   continued fraction  Ei(w) = -E1(-w) +- i pi          elsewhere;
//   asymptotic series   e^w/w sum k!/w^k                 large near-real w.
// -------------------------------------------------------
namespace detail {

template <typename C>
C ei_series(C w) {
    using std::log;
    C pow_term = w; // w^k / k!
    C sum = w;      // running sum of w^k / (k * k!)
    for (int k = 2; k < 400; ++k) {
        pow_term *= w / static_cast<double>(k);
        const C contrib = pow_term / static_cast<double>(k);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return kEulerGamma + log(w) + sum;
}

// E1 via the standard continued fraction (modified Lentz). Valid for
// z off the negative real axis; convergence degrades near the cut.
template <typename C>
C e1_continued_fraction(C z) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    C b = z + 1.0;
    C c = 1.0 / tiny;
    C d = 1.0 / b;
    C h = d;
    for (int i = 1; i < 20000; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const C del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-z);
}

// Asymptotic expansion, truncated at the smallest term.
template <typename C>
C ei_asymptotic(C w) {
    C term = 1.0;
    C sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= static_cast<double>(k) / w;
        const double mag = std::abs(term);
        if (mag > prev) break; // divergence onset
        sum += term;
        prev = mag;
        if (mag < 1e-18) break;
    }
    return std::exp(w) / w * sum;
}

} // namespace detail

// Real exponential integral, w != 0.
inline double ei(double w) {
    if (w == 0.0) throw std::domain_error("ei: argument must be nonzero");
    if (w > 0.0) {
        // no cancellation for positive w: series until it converges
        if (w <= 40.0) return detail::ei_series(w);
        return detail::ei_asymptotic(w);
    }
    // w < 0: Ei(w) = -E1(-w), -w on the positive real axis
    return -detail::e1_continued_fraction(-w);
}

// Complex exponential integral on the principal branch (cut along the
// negative real axis).
inline std::complex<double> ei(std::complex<double> w) {
    if (w == std::complex<double>(0.0, 0.0))
        throw std::domain_error("ei: argument must be nonzero");
    if (w.imag() == 0.0) {
        // on the negative axis this is the real principal value
        return {ei(w.real()), 0.0};
    }
    const double mag = std::abs(w);
    if (mag <= 12.0) return detail::ei_series(w);
    // near the positive real direction the CF argument -w approaches the
    // cut; stay with the series (no destructive cancellation there), then
    // switch to the asymptotic expansion.
    if (std::abs(std::arg(w)) <= 0.25 * std::numbers::pi) {
        if (mag <= 40.0) return detail::ei_series(w);
        return detail::ei_asymptotic(w);
    }
    const std::complex<double> e1 = detail::e1_continued_fraction(-w);
    const double sign = w.imag() > 0.0 ? 1.0 : -1.0;
    return -e1 + std::complex<double>(0.0, sign * std::numbers::pi);
}

// -------------------------------------------------------
// The paper's logarithmic integral: Li(x) = int_2^x du/log u.
// -------------------------------------------------------

// Real Li by adaptive quadrature (independent of the Ei route, which
// makes the two cross-checkable). Integrates in t = log u, where the
// integrand e^t/t needs far fewer panels at large x.
inline double li_real(double x, double tol = 1e-10) {
    if (!(x >= 2.0)) throw std::invalid_argument("li_real: x must be >= 2");
    if (x == 2.0) return 0.0;
    auto g = [](double t) { return std::exp(t) / t; };
    return adaptive_simpson(g, std::log(2.0), std::log(x), tol);
}

// Complex Li(z) = Ei(log z) - Ei(log 2) on the principal branch;
// undefined on the real interval (-inf, 1].
inline std::complex<double> li_complex(std::complex<double> z, double tol = 1e-10) {
    (void)tol; // Ei evaluation is at fixed (near machine) accuracy
    if (z.imag() == 0.0 && z.real() <= 1.0)
        throw std::domain_error("li_complex: z on the branch cut (-inf, 1]");
    static const double ei_log2 = ei(std::log(2.0));
    return ei(std::log(z)) - ei_log2;
}

// Ei(s log x) for real x > 1 and complex exponent s: the zero-term
// building block of the explicit formula. Named Li(x^s) in the
// literature; evaluated through s*log x because the principal log of
// the complex power x^s folds the phase mod 2*pi and wrecks the sum.
inline std::complex<double> ei_power(double x, std::complex<double> s) {
    return ei(s * std::log(x));
}

// -------------------------------------------------------
// Tail integral int_x^inf du/(u (u^2-1) log u), convergent for x > 1.
// Quadrature to a cut point T plus a certified remainder bound
// int_T^inf du/(u^3 log u) < 1/(2 T^2 log T), which stays below 5e-15
// for T >= 10^6 and is simply dropped.
// -------------------------------------------------------
inline double tail_integral(double x, double tol = 1e-10) {
    if (!(x > 1.0)) throw std::domain_error("tail_integral: x must be > 1");
    const double cut = std::max(1e6, 100.0 * x);
    auto f = [](double u) { return 1.0 / (u * (u * u - 1.0) * std::log(u)); };
    // integrate in t = log u to tame the 1/(u-1) blow-up near x ~ 1
    auto g = [&](double t) {
        const double u = std::exp(t);
        return f(u) * u;
    };
    return adaptive_simpson(g, std::log(x), std::log(cut), tol);
}

} // namespace gbl
