// explicit_formula.hpp
// Truncated explicit formula for pi(x) over the nontrivial zeta zeros,
// and the three-part (Li / zero / tail-integral) decompositions of the
// prime counts K(n, n^s) and L(n).
//
// The r-sum runs over squarefree r with x^(1/r) >= 2 (r <= log2 x);
// beyond that the Li-from-2 convention contributes nothing. Zero terms
// are evaluated pairwise as 2*Re(Ei((rho/r) log x)) and accumulated in
// ascending gamma order with compensated summation, so results are
// exactly real and reproducible.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gbl/prime_core.hpp"
#include "gbl/special_functions.hpp"
#include "gbl/zeta_zeros.hpp"

namespace gbl {

enum class ConstantMode {
    paper,     // subtract 3.7277 * log 2, as printed in the source formula
    classical, // subtract log 2, the Riemann-von Mangoldt constant
};

struct FormulaParams {
    std::uint64_t r_max = 0;       // 0: no extra cap beyond r <= log2 x
    std::size_t zero_count = 1000; // zeros used per Li-sum
    ConstantMode constant_mode = ConstantMode::classical;
    double quad_tol = 1e-10;       // absolute quadrature tolerance

    double constant() const {
        const double log2 = std::log(2.0);
        return constant_mode == ConstantMode::paper ? 3.7277 * log2 : log2;
    }
};

// One r-term of the formula, kept for the CLI's term table.
struct FormulaTerm {
    std::uint64_t r;
    int mu;
    double x_root;      // x^(1/r)
    double li_part;     // Li(x^(1/r))
    double zero_part;   // -sum over zeros of the conjugate pair terms
    double tail_part;   // tail integral at x^(1/r)
    double constant;    // subtracted constant
    double contribution() const {
        return (mu / static_cast<double>(r)) * (li_part + zero_part + tail_part - constant);
    }
};

struct ThreePartValue {
    double li_part = 0.0;
    double zero_part = 0.0;
    double integral_part = 0.0;
    double total() const { return li_part + zero_part + integral_part; }
};

namespace detail {

// Squarefree r with their Moebius signs, up to r_cap.
inline std::vector<std::pair<std::uint64_t, int>> squarefree_terms(std::uint64_t r_cap) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t r = 1; r <= r_cap; ++r) {
        const int mu = moebius(r);
        if (mu != 0) out.emplace_back(r, mu);
    }
    return out;
}

// Sum over the first `count` zeros of 2*Re(Ei((rho/r) log x)), the
// paired zero contribution at one argument. Ascending gamma, Neumaier
// compensated.
inline double zero_pair_sum(double x, std::uint64_t r, const ZeroTable& zeros,
                            std::size_t count) {
    const double logx_r = std::log(x) / static_cast<double>(r);
    CompensatedSum acc;
    const std::size_t n = std::min(count, zeros.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> w(0.5 * logx_r, zeros.gammas[i] * logx_r);
        acc.add(2.0 * ei(w).real());
    }
    return acc.value();
}

} // namespace detail

// Per-r term table of the truncated formula at x.
inline std::vector<FormulaTerm> riemann_pi_terms(double x, const FormulaParams& params,
                                                 const ZeroTable& zeros) {
    if (!(x >= 2.0)) throw std::invalid_argument("riemann_pi: x must be >= 2");
    if (params.zero_count > 0 && zeros.empty())
        throw std::invalid_argument("riemann_pi: zero_count > 0 but zero table is empty");
    std::uint64_t r_cap = static_cast<std::uint64_t>(std::floor(std::log2(x)));
    if (r_cap < 1) r_cap = 1;
    if (params.r_max > 0) r_cap = std::min(r_cap, params.r_max);

    std::vector<FormulaTerm> terms;
    for (auto [r, mu] : detail::squarefree_terms(r_cap)) {
        FormulaTerm t;
        t.r = r;
        t.mu = mu;
        t.x_root = std::pow(x, 1.0 / static_cast<double>(r));
        if (t.x_root < 2.0) continue; // guard against rounding at the cap
        t.li_part = li_real(t.x_root, params.quad_tol);
        t.zero_part = params.zero_count == 0
                          ? 0.0
                          : -detail::zero_pair_sum(x, r, zeros, params.zero_count);
        t.tail_part = tail_integral(t.x_root, params.quad_tol);
        t.constant = params.constant();
        terms.push_back(t);
    }
    return terms;
}

// Truncated explicit formula for pi(x). Exactly real by construction:
// conjugate zero pairs are folded into 2*Re before accumulation.
inline double riemann_pi(double x, const FormulaParams& params, const ZeroTable& zeros) {
    CompensatedSum acc;
    for (const FormulaTerm& t : riemann_pi_terms(x, params, zeros))
        acc.add(t.contribution());
    return acc.value();
}

// -------------------------------------------------------
// Three-part decompositions. Each prime count is a difference of
// two pi-expansions, so the subtracted constants cancel pairwise and
// only the Li, zero, and tail parts remain. The common r-range of a
// pair is capped by its lower endpoint so the cancellation is exact.
// -------------------------------------------------------
namespace detail {

// Accumulate the decomposition of pi(hi) - pi(lo) into `out`.
inline void accumulate_pair_decomposition(double lo, double hi,
                                          const FormulaParams& params,
                                          const ZeroTable& zeros, ThreePartValue& out) {
    if (!(lo >= 2.0) || !(hi >= lo))
        throw std::invalid_argument("decomposition: need 2 <= lo <= hi");
    std::uint64_t r_cap = static_cast<std::uint64_t>(std::floor(std::log2(lo)));
    if (r_cap < 1) r_cap = 1;
    if (params.r_max > 0) r_cap = std::min(r_cap, params.r_max);

    CompensatedSum li_acc, zero_acc, tail_acc;
    li_acc.add(out.li_part);
    zero_acc.add(out.zero_part);
    tail_acc.add(out.integral_part);
    for (auto [r, mu] : squarefree_terms(r_cap)) {
        const double weight = mu / static_cast<double>(r);
        const double lo_root = std::pow(lo, 1.0 / static_cast<double>(r));
        const double hi_root = std::pow(hi, 1.0 / static_cast<double>(r));
        if (lo_root < 2.0) continue;
        li_acc.add(weight * (li_real(hi_root, params.quad_tol) -
                             li_real(lo_root, params.quad_tol)));
        if (params.zero_count > 0)
            zero_acc.add(weight * (zero_pair_sum(lo, r, zeros, params.zero_count) -
                                   zero_pair_sum(hi, r, zeros, params.zero_count)));
        tail_acc.add(weight * (tail_integral(hi_root, params.quad_tol) -
                               tail_integral(lo_root, params.quad_tol)));
    }
    out.li_part = li_acc.value();
    out.zero_part = zero_acc.value();
    out.integral_part = tail_acc.value();
}

} // namespace detail

// Decomposition of K(n, n^s): the analytic expansion of the prime count
// in (n^(s+1), n^(s+1) + sum_n]. `sum_n` is the exact integer from the
// conjecture machinery; passing it in keeps this module free of the
// sieve. Throws std::out_of_range if n^(s+1) + sum_n overflows.
inline ThreePartValue k_decomposition(std::uint64_t n, std::uint64_t s,
                                      std::uint64_t sum_n, const FormulaParams& params,
                                      const ZeroTable& zeros) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("k_decomposition: n must be even and >= 4");
    __uint128_t mn = 1;
    for (std::uint64_t i = 0; i < s + 1; ++i) {
        mn *= n;
        if (mn > static_cast<__uint128_t>(UINT64_MAX))
            throw std::out_of_range("k_decomposition: n^(s+1) overflows 64 bits");
    }
    if (mn + sum_n > static_cast<__uint128_t>(UINT64_MAX))
        throw std::out_of_range("k_decomposition: n^(s+1) + sum(n) overflows 64 bits");
    const double lo = static_cast<double>(static_cast<std::uint64_t>(mn));
    const double hi = static_cast<double>(static_cast<std::uint64_t>(mn) + sum_n);
    ThreePartValue out;
    detail::accumulate_pair_decomposition(lo, hi, params, zeros, out);
    return out;
}

// Decomposition of L(n) over an explicit interval list (pairs of
// (lo, hi] with 2 <= lo < hi). Sums the pairwise decompositions.
inline ThreePartValue l_decomposition(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals,
                                      const FormulaParams& params, const ZeroTable& zeros) {
    ThreePartValue out;
    for (auto [lo, hi] : intervals)
        detail::accumulate_pair_decomposition(static_cast<double>(lo),
                                              static_cast<double>(hi), params, zeros, out);
    return out;
}

} // namespace gbl
