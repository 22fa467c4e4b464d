// conjecture_one.hpp
// Exact integer machinery of the first conjecture: the decomposition
// sum(n) = n - 2 phi(n) - 2 D(n) + 2 pi(n) + 2, the shifted count
// K(n, m) of primes in (mn, mn + sum(n)], the interval system behind
// L(n), the power-of-two endpoint adjustment, and the per-n
// verification record L(n) - D(n) >= K(n, n^s) >= 2.
//
// A failed inequality is data, never an abort: records carry a note
// and the caller decides what to do with it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbl/prime_core.hpp"

namespace gbl {

// ------------------------------------------------------------------
// sum(n) and its ingredients
// ------------------------------------------------------------------
struct SumDecomposition {
    std::uint64_t n = 0;
    std::uint64_t phi = 0;   // Euler totient
    std::uint64_t d = 0;     // distinct prime factors
    std::uint64_t pi_n = 0;  // primes <= n
    std::uint64_t sum_n = 0; // n - 2 phi - 2 d + 2 pi + 2
};

inline SumDecomposition sum_n(const PrimeCache& cache, std::uint64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("sum_n: n must be even and >= 4");
    if (n > cache.limit())
        throw std::out_of_range("sum_n: n exceeds prime cache limit");
    const Factorization f = factorize(n);
    SumDecomposition s;
    s.n = n;
    s.phi = totient(f);
    s.d = distinct_prime_count(f);
    s.pi_n = cache.prime_pi(n);
    // For even n, n - 2 phi(n) >= 0, so this cannot wrap.
    s.sum_n = n - 2 * s.phi - 2 * s.d + 2 * s.pi_n + 2;
    return s;
}

// M(n, m) = m*n + sum(n), overflow-checked.
inline std::uint64_t big_m(const PrimeCache& cache, std::uint64_t n, std::uint64_t m) {
    const SumDecomposition s = sum_n(cache, n);
    __uint128_t v = static_cast<__uint128_t>(m) * n + s.sum_n;
    if (v > static_cast<__uint128_t>(UINT64_MAX))
        throw std::out_of_range("big_m: m*n + sum(n) overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

// ------------------------------------------------------------------
// Power-of-two endpoint adjustment: pi-query arguments that are exact
// powers of two are shifted to 2^d + 2 (d odd) or 2^d - 2 (d even),
// which leaves the prime count unchanged for d >= 3. Identity for
// everything else.
// ------------------------------------------------------------------
inline std::uint64_t power_of_two_adjust(std::uint64_t x) {
    if (x < 4) throw std::invalid_argument("power_of_two_adjust: x must be >= 4");
    if ((x & (x - 1)) != 0) return x; // not a power of two
    unsigned d = 0;
    for (std::uint64_t v = x; v > 1; v >>= 1) ++d;
    return (d % 2 == 1) ? x + 2 : x - 2;
}

// ------------------------------------------------------------------
// K(n, m): primes in (mn, mn + sum(n)], endpoints adjusted.
// k_exact fixes m = n^s, the form the source tables use.
// ------------------------------------------------------------------
inline std::uint64_t k_exact_m(const PrimeCache& cache, std::uint64_t n, std::uint64_t m) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("k_exact: n must be even and >= 4");
    const std::uint64_t hi = big_m(cache, n, m); // throws on overflow
    const std::uint64_t lo = hi - sum_n(cache, n).sum_n;
    // adjustment is count-preserving from 8 up; below that, identity
    const std::uint64_t alo = lo >= 8 ? power_of_two_adjust(lo) : lo;
    const std::uint64_t ahi = hi >= 8 ? power_of_two_adjust(hi) : hi;
    return prime_pi_interval(alo, ahi, &cache);
}

inline std::uint64_t k_exact(const PrimeCache& cache, std::uint64_t n, std::uint64_t s) {
    if (s < 2) throw std::invalid_argument("k_exact: s must be >= 2");
    __uint128_t m = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        m *= n;
        if (m > static_cast<__uint128_t>(UINT64_MAX))
            throw std::out_of_range("k_exact: n^s overflows 64 bits");
    }
    return k_exact_m(cache, n, static_cast<std::uint64_t>(m));
}

// ------------------------------------------------------------------
// The L(n) interval system.
//
// The generating rule in the source defers to machinery that is not
// reproduced there; the default below is a documented reconstruction.
// Anchors are the divisors d of n with 1 < d and d^2 <= n, sorted
// ascending; the intervals walk down from n between consecutive
// squared anchors with +1/-1 endpoint nudges, ending in a tail down
// to 2. Callers may inject any interval list instead (generator_id
// "custom").
// ------------------------------------------------------------------
struct IntervalSpec {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals; // (lo, hi], ascending
    std::string generator_id;
};

struct IntervalOptions {
    // Endpoint nudges as typeset in the interval sum: the high end of
    // an inner interval is n - d^2 - 1, the low end n - d'^2 + 1. The
    // typesetting is ambiguous about the signs, so both are knobs.
    int hi_offset = -1;
    int lo_offset = +1;
};

inline std::vector<std::uint64_t> divisor_anchors(std::uint64_t n) {
    std::vector<std::uint64_t> anchors;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) anchors.push_back(d);
    return anchors;
}

inline IntervalSpec l_intervals(std::uint64_t n, const IntervalOptions& opt = {}) {
    if (n % 2 != 0) throw std::invalid_argument("l_intervals: n must be even");
    if (n < 120) throw std::domain_error("l_intervals: n below the conjecture domain (>= 120)");
    const std::vector<std::uint64_t> anchors = divisor_anchors(n);
    IntervalSpec spec;
    spec.n = n;
    spec.generator_id = "divisor-squares-v1";

    // Built top-down, stored ascending at the end.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> down;
    auto clamp_push = [&](std::int64_t lo, std::int64_t hi) {
        if (lo < 2) lo = 2;
        if (hi > static_cast<std::int64_t>(n)) hi = static_cast<std::int64_t>(n);
        if (lo < hi)
            down.emplace_back(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi));
    };
    if (anchors.empty()) {
        // no admissible divisor: the whole range (2, n] in one piece
        clamp_push(2, static_cast<std::int64_t>(n));
    } else {
        const std::int64_t sn = static_cast<std::int64_t>(n);
        clamp_push(sn - static_cast<std::int64_t>(anchors[0] * anchors[0]) + opt.lo_offset, sn);
        for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
            const std::int64_t hi =
                sn - static_cast<std::int64_t>(anchors[k] * anchors[k]) + opt.hi_offset;
            const std::int64_t lo =
                sn - static_cast<std::int64_t>(anchors[k + 1] * anchors[k + 1]) + opt.lo_offset;
            clamp_push(lo, hi);
        }
        const std::uint64_t last_sq = anchors.back() * anchors.back();
        clamp_push(2, sn - static_cast<std::int64_t>(last_sq) + opt.hi_offset);
    }
    std::sort(down.begin(), down.end());
    spec.intervals = std::move(down);
    return spec;
}

inline IntervalSpec custom_intervals(std::uint64_t n,
                                     std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals) {
    IntervalSpec spec;
    spec.n = n;
    spec.intervals = std::move(intervals);
    spec.generator_id = "custom";
    return spec;
}

// Validate the IntervalSpec invariants: 2 <= lo < hi <= n, pairwise
// disjoint (assumes ascending order).
inline void validate_intervals(const IntervalSpec& spec) {
    std::uint64_t prev_hi = 0;
    for (auto [lo, hi] : spec.intervals) {
        if (lo < 2 || lo >= hi || hi > spec.n)
            throw std::invalid_argument("IntervalSpec: interval violates 2 <= lo < hi <= n");
        if (lo < prev_hi)
            throw std::invalid_argument("IntervalSpec: intervals overlap");
        prev_hi = hi;
    }
}

// L(n): total primes inside the interval system, power-of-two
// endpoints adjusted. The adjustment is count-preserving only from 8
// up (pi(4-2) != pi(4), since 3 is prime), so 4 is left alone here.
inline std::uint64_t l_exact(const PrimeCache& cache, const IntervalSpec& spec) {
    validate_intervals(spec);
    std::uint64_t total = 0;
    for (auto [lo, hi] : spec.intervals) {
        const std::uint64_t alo = lo >= 8 ? power_of_two_adjust(lo) : lo;
        const std::uint64_t ahi = hi >= 8 ? power_of_two_adjust(hi) : hi;
        total += cache.prime_pi(ahi) - cache.prime_pi(alo);
    }
    return total;
}

// ------------------------------------------------------------------
// verify_first: the full inequality chain at one n, with every
// intermediate quantity kept for reporting.
// ------------------------------------------------------------------
struct VerificationRecord {
    std::uint64_t n = 0;
    std::uint64_t s = 0;
    SumDecomposition sum;
    std::uint64_t mn = 0;      // n^(s+1)
    std::uint64_t k_value = 0; // K(n, n^s)
    std::uint64_t l_value = 0; // L(n) over the generated intervals
    std::uint64_t g_n = 0;     // Goldbach partitions of n
    bool inequality_holds = false;
    std::string notes;
};

inline VerificationRecord verify_first(const PrimeCache& cache, std::uint64_t n,
                                       std::uint64_t s,
                                       const IntervalOptions& opt = {}) {
    if (n % 2 != 0) throw std::invalid_argument("verify_first: n must be even");
    if (n < 120) throw std::domain_error("verify_first: n below the conjecture domain (>= 120)");
    if (s < 2) throw std::invalid_argument("verify_first: s must be >= 2");
    VerificationRecord rec;
    rec.n = n;
    rec.s = s;
    rec.sum = sum_n(cache, n);
    __uint128_t mn = 1;
    for (std::uint64_t i = 0; i < s + 1; ++i) {
        mn *= n;
        if (mn > static_cast<__uint128_t>(UINT64_MAX))
            throw std::out_of_range("verify_first: n^(s+1) overflows 64 bits");
    }
    rec.mn = static_cast<std::uint64_t>(mn);
    rec.k_value = k_exact(cache, n, s);
    rec.l_value = l_exact(cache, l_intervals(n, opt));
    rec.g_n = goldbach_partitions(cache, n);

    const bool k_ge_2 = rec.k_value >= 2;
    const bool l_minus_d_ge_k = rec.l_value >= rec.k_value + rec.sum.d;
    rec.inequality_holds = k_ge_2 && l_minus_d_ge_k;
    if (!k_ge_2) rec.notes += "K<2;";
    if (!l_minus_d_ge_k) rec.notes += "L-D<K;";
    if (rec.g_n == 0) rec.notes += "no-goldbach-partition;";
    return rec;
}

} // namespace gbl
