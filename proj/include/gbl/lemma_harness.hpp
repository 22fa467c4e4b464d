// lemma_harness.hpp
// Numerical audits of the standalone lemma inequalities: alternating
// root sums, the (1+x)^(1/r) bracket, the Rosser-Schoenfeld pi(x)
// bounds, the sum(n) auxiliary inequalities, the complex mean-value
// diagnostic, and the closed-form cosine sums.
//
// Every check produces a finding; a violated inequality is recorded,
// never thrown. Scans report violations plus a summary and can stream
// every row to a sink for CSV output.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbl/prime_core.hpp"
#include "gbl/special_functions.hpp"

namespace gbl {

struct LemmaFinding {
    std::string lemma_id;
    std::string input; // parameter tuple, human-readable
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // negative on violation
};

using FindingSink = std::function<void(const LemmaFinding&)>;

struct ScanResult {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<LemmaFinding> violation_findings;
};

// Strictness slack for real-valued comparisons.
inline constexpr double kRealMargin = 1e-12;

// ------------------------------------------------------------------
// Lemma 2: for nonincreasing positive n_1 >= ... >= n_k and natural r,
//   n_1^(1/r) - n_2^(1/r) + ... <= (n_1 - n_2 + ...)^(1/r).
// ------------------------------------------------------------------
inline LemmaFinding lemma2_check(const std::vector<std::uint64_t>& seq, std::uint64_t r) {
    if (seq.size() < 2)
        throw std::invalid_argument("lemma2_check: need at least two terms");
    if (r < 1) throw std::invalid_argument("lemma2_check: r must be >= 1");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 0) throw std::invalid_argument("lemma2_check: terms must be positive");
        if (i > 0 && seq[i] > seq[i - 1])
            throw std::invalid_argument("lemma2_check: sequence must be nonincreasing");
    }
    double root_sum = 0.0;
    std::int64_t alt_sum = 0;
    double sign = 1.0;
    for (std::uint64_t v : seq) {
        root_sum += sign * std::pow(static_cast<double>(v), 1.0 / static_cast<double>(r));
        alt_sum += static_cast<std::int64_t>(sign) * static_cast<std::int64_t>(v);
        sign = -sign;
    }
    LemmaFinding f;
    f.lemma_id = "lemma2";
    std::ostringstream in;
    in << "k=" << seq.size() << " r=" << r << " n1=" << seq.front() << " nk=" << seq.back();
    f.input = in.str();
    f.lhs = root_sum;
    f.rhs = std::pow(static_cast<double>(alt_sum), 1.0 / static_cast<double>(r));
    f.margin = f.rhs - f.lhs;
    f.holds = f.lhs <= f.rhs + kRealMargin * (1.0 + std::abs(f.rhs));
    return f;
}

// ------------------------------------------------------------------
// Lemma 3: for 0 < x < 1 and natural r,
//   1 + x/(2r) < (1+x)^(1/r) < 1 + x/r.
// At r = 1 the upper relation is an identity and is accepted as such.
// ------------------------------------------------------------------
inline LemmaFinding lemma3_check(double x, std::uint64_t r) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("lemma3_check: x must lie in (0,1)");
    if (r < 1) throw std::invalid_argument("lemma3_check: r must be >= 1");
    const double mid = std::pow(1.0 + x, 1.0 / static_cast<double>(r));
    LemmaFinding f;
    f.lemma_id = "lemma3";
    std::ostringstream in;
    in << "x=" << x << " r=" << r << " mid=" << mid;
    f.input = in.str();
    f.lhs = 1.0 + x / (2.0 * static_cast<double>(r));
    f.rhs = 1.0 + x / static_cast<double>(r);
    const double lower_margin = mid - f.lhs;
    const double upper_margin = r == 1 ? 0.0 : f.rhs - mid;
    const bool lower_ok = lower_margin > -kRealMargin;
    const bool upper_ok = r == 1 ? std::abs(f.rhs - mid) <= 4.0 * kRealMargin
                                 : upper_margin > -kRealMargin;
    f.margin = std::min(lower_margin, upper_margin);
    f.holds = lower_ok && upper_ok;
    return f;
}

// ------------------------------------------------------------------
// Lemma 10 (Rosser & Schoenfeld): for x >= 59,
//   x/log x (1 + 1/(2 log x)) < pi(x) < x/log x (1 + 3/(2 log x)).
// ------------------------------------------------------------------
inline double rosser_lower(double x) {
    const double lx = std::log(x);
    return x / lx * (1.0 + 1.0 / (2.0 * lx));
}
inline double rosser_upper(double x) {
    const double lx = std::log(x);
    return x / lx * (1.0 + 3.0 / (2.0 * lx));
}

// Companion lower-bound column of the K table:
//   n / (3 (log n)^2) * (1 + 1/(2 log n)),
// the r = 1 term of the Li-part bound at s = 2.
inline double k_table_bound(double n) {
    const double ln = std::log(n);
    return n / (3.0 * ln * ln) * (1.0 + 1.0 / (2.0 * ln));
}

inline ScanResult rosser_schoenfeld_scan(const PrimeCache& cache, std::uint64_t lo,
                                         std::uint64_t hi,
                                         const FindingSink& sink = nullptr) {
    if (lo < 59)
        throw std::domain_error("rosser_schoenfeld_scan: bounds hold for x >= 59");
    if (hi > cache.limit())
        throw std::out_of_range("rosser_schoenfeld_scan: hi exceeds cache limit");
    ScanResult result;
    std::uint64_t pi = cache.prime_pi(lo);
    for (std::uint64_t x = lo; x <= hi; ++x) {
        if (x > lo && cache.is_prime(x)) ++pi;
        const double lower = rosser_lower(static_cast<double>(x));
        const double upper = rosser_upper(static_cast<double>(x));
        const bool ok = lower < static_cast<double>(pi) && static_cast<double>(pi) < upper;
        ++result.checked;
        if (!ok || sink) {
            LemmaFinding f;
            f.lemma_id = "lemma10";
            f.input = "x=" + std::to_string(x);
            f.lhs = lower;
            f.rhs = upper;
            f.margin = std::min(static_cast<double>(pi) - lower,
                                upper - static_cast<double>(pi));
            f.holds = ok;
            if (sink) sink(f);
            if (!ok) {
                ++result.violations;
                result.violation_findings.push_back(std::move(f));
            }
        }
    }
    return result;
}

// ------------------------------------------------------------------
// Auxiliary inequalities on sum(n) and D(n), scanned over a range
// with a smallest-prime-factor sieve (phi and D in O(log n) per n).
// Violations below the stated thresholds (even n < 120 for the sum
// inequalities, n < 10^6 for the D bound) are exploratory data.
// ------------------------------------------------------------------
enum class AuxInequality {
    sum_ge_2pi,        // sum(n) >= 2 pi(n), even n (threshold n >= 120)
    sum_gt_sqrt,       // sum(n) > sqrt(n), even n
    d_lt_fourth_root,  // D(n) < n^(1/4)   (threshold n >= 10^6)
};

namespace detail {

struct SpfSieve {
    std::vector<std::uint32_t> spf; // smallest prime factor, index up to hi
    explicit SpfSieve(std::uint64_t hi) : spf(hi + 1, 0) {
        for (std::uint64_t i = 2; i <= hi; ++i) {
            if (spf[i] == 0)
                for (std::uint64_t j = i; j <= hi; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    // (phi(n), D(n)) in one pass over the factorization
    std::pair<std::uint64_t, std::uint64_t> phi_d(std::uint64_t n) const {
        std::uint64_t phi = 1, d = 0;
        while (n > 1) {
            const std::uint64_t p = spf[n];
            ++d;
            std::uint64_t pe = 1;
            while (n % p == 0) { n /= p; pe *= p; }
            phi *= pe / p * (p - 1);
        }
        return {phi, d};
    }
};

} // namespace detail

inline ScanResult aux_inequality_scan(const PrimeCache& cache, AuxInequality which,
                                      std::uint64_t lo, std::uint64_t hi,
                                      const FindingSink& sink = nullptr) {
    if (hi > cache.limit())
        throw std::out_of_range("aux_inequality_scan: hi exceeds cache limit");
    if (lo < 2) lo = 2;
    ScanResult result;
    const bool even_only = which != AuxInequality::d_lt_fourth_root;
    const std::uint64_t paper_threshold =
        which == AuxInequality::d_lt_fourth_root ? 1'000'000 : 120;

    detail::SpfSieve sieve(hi);
    std::uint64_t start = lo;
    if (even_only) {
        if (start < 4) start = 4;
        if (start % 2 != 0) ++start;
    }
    std::uint64_t x = start - 1;
    std::uint64_t pi = cache.prime_pi(x); // running pi, advanced with x
    for (std::uint64_t n = start; n <= hi; n += even_only ? 2 : 1) {
        while (x < n) {
            ++x;
            if (cache.is_prime(x)) ++pi;
        }
        auto [phi, d] = sieve.phi_d(n);
        double lhs = 0.0, rhs = 0.0;
        std::string id;
        if (which == AuxInequality::d_lt_fourth_root) {
            id = "aux.d_lt_fourth_root";
            lhs = static_cast<double>(d);
            rhs = std::pow(static_cast<double>(n), 0.25);
        } else {
            const std::uint64_t sum = n - 2 * phi - 2 * d + 2 * pi + 2;
            if (which == AuxInequality::sum_ge_2pi) {
                id = "lemma1.sum_ge_2pi";
                lhs = static_cast<double>(sum);
                rhs = 2.0 * static_cast<double>(pi);
            } else {
                id = "aux.sum_gt_sqrt";
                lhs = static_cast<double>(sum);
                rhs = std::sqrt(static_cast<double>(n));
            }
        }
        // sum_ge_2pi allows equality; the other two are strict, and the
        // fourth-root bound points the other way (D below the root)
        bool ok = false;
        switch (which) {
            case AuxInequality::sum_ge_2pi: ok = lhs >= rhs; break;
            case AuxInequality::sum_gt_sqrt: ok = lhs > rhs; break;
            case AuxInequality::d_lt_fourth_root: ok = lhs < rhs; break;
        }
        ++result.checked;
        if (!ok || sink) {
            LemmaFinding f;
            f.lemma_id = id;
            f.input = "n=" + std::to_string(n) +
                      (n < paper_threshold ? " (exploratory)" : "");
            f.lhs = lhs;
            f.rhs = rhs;
            // margin is negative exactly on violation
            f.margin = which == AuxInequality::d_lt_fourth_root ? rhs - lhs : lhs - rhs;
            f.holds = ok;
            if (sink) sink(f);
            if (!ok) {
                ++result.violations;
                result.violation_findings.push_back(std::move(f));
            }
        }
    }
    return result;
}

// ------------------------------------------------------------------
// Theorem 1 diagnostic. The claim under audit: for f analytic on the
// segment [g, h],
//   (F(h) - F(g)) / (h - g) = f(C)  with  min ||f|| <= ||C...|| <= max ||f||
// sampled along the segment. This fails for general complex
// integrands, so the outcome is data, not an assumption.
// ------------------------------------------------------------------
enum class Theorem1Function { constant, reciprocal_log, custom_poly };

inline LemmaFinding theorem1_diagnostic(Theorem1Function f_id, std::complex<double> g,
                                        std::complex<double> h, std::size_t samples,
                                        std::complex<double> constant_value = {1.0, 0.0}) {
    if (samples < 2) throw std::invalid_argument("theorem1_diagnostic: samples must be >= 2");
    if (g == h) throw std::invalid_argument("theorem1_diagnostic: degenerate segment");

    auto f = [&](std::complex<double> u) -> std::complex<double> {
        switch (f_id) {
            case Theorem1Function::constant: return constant_value;
            case Theorem1Function::reciprocal_log: return 1.0 / std::log(u);
            case Theorem1Function::custom_poly: return u * u;
        }
        return {0.0, 0.0};
    };

    if (f_id == Theorem1Function::reciprocal_log) {
        // the segment must stay clear of u = 1 (log u = 0) and the
        // branch cut (-inf, 0]
        const std::complex<double> dir = h - g;
        const double len2 = std::norm(dir);
        const double t = std::clamp(((1.0 - g.real()) * dir.real() +
                                     (0.0 - g.imag()) * dir.imag()) / len2, 0.0, 1.0);
        const std::complex<double> closest = g + t * dir;
        if (std::abs(closest - std::complex<double>(1.0, 0.0)) < 1e-9)
            throw std::domain_error("theorem1_diagnostic: segment passes through log singularity");
        if ((g.imag() > 0) != (h.imag() > 0)) {
            const double tc = g.imag() / (g.imag() - h.imag());
            const double xc = g.real() + tc * (h.real() - g.real());
            if (xc <= 0.0)
                throw std::domain_error("theorem1_diagnostic: segment crosses the branch cut");
        } else if (g.imag() == 0.0 && g.real() <= 0.0) {
            throw std::domain_error("theorem1_diagnostic: endpoint on the branch cut");
        } else if (h.imag() == 0.0 && h.real() <= 0.0) {
            throw std::domain_error("theorem1_diagnostic: endpoint on the branch cut");
        }
    }

    const std::complex<double> integral = integrate_segment(f, g, h, 1e-11);
    const std::complex<double> ratio = integral / (h - g);
    double min_norm = std::numeric_limits<double>::infinity();
    double max_norm = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double norm = std::abs(f(g + t * (h - g)));
        min_norm = std::min(min_norm, norm);
        max_norm = std::max(max_norm, norm);
    }

    LemmaFinding out;
    out.lemma_id = "theorem1";
    std::ostringstream in;
    in << "f=" << static_cast<int>(f_id) << " g=(" << g.real() << "," << g.imag()
       << ") h=(" << h.real() << "," << h.imag() << ") min=" << min_norm;
    out.input = in.str();
    out.lhs = std::abs(ratio);
    out.rhs = max_norm;
    const double slack = kRealMargin * (1.0 + max_norm);
    out.margin = std::min(out.lhs - min_norm, max_norm - out.lhs);
    out.holds = out.lhs >= min_norm - slack && out.lhs <= max_norm + slack;
    return out;
}

// ------------------------------------------------------------------
// Closed-form cosine sums:
//   1 + sum_{k=1}^{M-1} cos(kx) = 1/2 + sin((M - 1/2)x) / (2 sin(x/2))
//       sum_{k=1}^{M}  cos(kx) = -1/2 + sin((M + 1/2)x) / (2 sin(x/2))
// checked against direct (compensated) summation.
// ------------------------------------------------------------------
inline LemmaFinding cosine_sum_check(std::uint64_t M, double x, double tol = 1e-10) {
    if (M < 1) throw std::invalid_argument("cosine_sum_check: M must be >= 1");
    const double half_sin = std::sin(0.5 * x);
    if (std::abs(half_sin) < 1e-12)
        throw std::domain_error("cosine_sum_check: x is a multiple of 2 pi");

    CompensatedSum direct1; // 1 + sum_{k<M} cos(kx)
    direct1.add(1.0);
    for (std::uint64_t k = 1; k < M; ++k) direct1.add(std::cos(static_cast<double>(k) * x));
    CompensatedSum direct2; // sum_{k<=M} cos(kx)
    for (std::uint64_t k = 1; k <= M; ++k) direct2.add(std::cos(static_cast<double>(k) * x));

    const double md = static_cast<double>(M);
    const double closed1 = 0.5 + std::sin((md - 0.5) * x) / (2.0 * half_sin);
    const double closed2 = -0.5 + std::sin((md + 0.5) * x) / (2.0 * half_sin);

    LemmaFinding f;
    f.lemma_id = "cosine_sums";
    std::ostringstream in;
    in << "M=" << M << " x=" << x;
    f.input = in.str();
    f.lhs = direct1.value();
    f.rhs = closed1;
    const double err = std::max(std::abs(direct1.value() - closed1),
                                std::abs(direct2.value() - closed2));
    f.margin = tol - err;
    f.holds = err <= tol;
    return f;
}

} // namespace gbl
