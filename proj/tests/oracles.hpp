// oracles.hpp
// Independent reference implementations used only by the tests. These
// deliberately avoid the library's code paths: a classic bool-array
// sieve instead of the odd bitset, trial division, brute-force gcd
// counting, and Romberg integration as the second quadrature scheme.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool trial_division_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Classic sieve of Eratosthenes over a bool array; cumulative counts.
struct SimpleSieve {
    std::vector<bool> is_prime;
    std::vector<std::uint32_t> pi; // pi[i] = primes <= i

    explicit SimpleSieve(std::uint64_t limit) : is_prime(limit + 1, true), pi(limit + 1, 0) {
        is_prime[0] = false;
        if (limit >= 1) is_prime[1] = false;
        for (std::uint64_t i = 2; i * i <= limit; ++i)
            if (is_prime[i])
                for (std::uint64_t j = i * i; j <= limit; j += i) is_prime[j] = false;
        std::uint32_t count = 0;
        for (std::uint64_t i = 0; i <= limit; ++i) {
            if (is_prime[i]) ++count;
            pi[i] = count;
        }
    }
};

inline std::uint64_t brute_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

inline int brute_moebius(std::uint64_t n) {
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

inline std::uint64_t brute_goldbach(const SimpleSieve& sieve, std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p <= n / 2; ++p)
        if (sieve.is_prime[p] && sieve.is_prime[n - p]) ++count;
    return count;
}

// Romberg integration: trapezoid refinement plus Richardson
// extrapolation. Independent of the adaptive Simpson in the library.
template <typename F>
double romberg(F&& f, double a, double b, int max_level = 22, double tol = 1e-12) {
    std::vector<std::vector<double>> r(1);
    double h = b - a;
    r[0].push_back(0.5 * h * (f(a) + f(b)));
    for (int k = 1; k <= max_level; ++k) {
        h *= 0.5;
        double sum = 0.0;
        const std::int64_t steps = 1LL << (k - 1);
        for (std::int64_t i = 1; i <= steps; ++i) sum += f(a + (2 * i - 1) * h);
        r.emplace_back();
        r[k].push_back(0.5 * r[k - 1][0] + h * sum);
        for (int j = 1; j <= k; ++j) {
            const double factor = std::pow(4.0, j);
            r[k].push_back((factor * r[k][j - 1] - r[k - 1][j - 1]) / (factor - 1.0));
        }
        if (k > 3 && std::abs(r[k][k] - r[k - 1][k - 1]) < tol) return r[k][k];
    }
    return r.back().back();
}

// Composite 8-panel-per-unit midpoint-refined Gauss-Legendre along a
// complex segment; used as the path-quadrature oracle for li_complex.
inline std::complex<double> segment_quadrature(std::complex<double> from,
                                               std::complex<double> to, int panels = 4000) {
    // 5-point Gauss-Legendre nodes on [-1, 1]
    static const double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double ws[5] = {0.2369268850561891, 0.4786286704993665,
                                 0.5688888888888889, 0.4786286704993665,
                                 0.2369268850561891};
    const std::complex<double> dir = to - from;
    std::complex<double> total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double t0 = static_cast<double>(p) / panels;
        const double t1 = static_cast<double>(p + 1) / panels;
        for (int i = 0; i < 5; ++i) {
            const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * xs[i];
            const std::complex<double> u = from + t * dir;
            total += ws[i] * 0.5 * (t1 - t0) * (1.0 / std::log(u));
        }
    }
    return total * dir;
}

} // namespace oracle
