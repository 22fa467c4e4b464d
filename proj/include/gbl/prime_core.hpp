// prime_core.hpp
// Exact arithmetic-function backbone: sieve-backed primality and prime
// counting, segmented prime counts in (lo, hi] far beyond the cache,
// factorization, totient, Moebius, and the Goldbach partition oracle.
//
// All counting is done in uint64_t; overflow is checked, never silent.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbl/errors.hpp"

namespace gbl {

using std::uint64_t;

// Integer square root, exact for the full uint64_t range.
inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// -------------------------------------------------------
// PrimeCache: primality bitset over [2, limit] plus cumulative
// counts at fixed block boundaries, so prime_pi(x) costs at most
// one block sweep of popcounts.
//
// Storage: 1 bit per odd number, bit i <-> 2*i + 3.
// Immutable after construction; safe to share across threads.
// -------------------------------------------------------
class PrimeCache {
public:
    static constexpr std::size_t kBlockWords = 16; // 16 words = 2048 integers

    // Sieve all primes <= limit. Requires limit >= 2.
    explicit PrimeCache(uint64_t limit) : limit_(limit) {
        if (limit < 2)
            throw std::invalid_argument("PrimeCache: limit must be >= 2");
        const uint64_t bits = num_bits(limit);
        words_.assign((bits + 63) / 64, ~0ULL);
        // mask tail bits beyond `limit`
        if (bits % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (bits % 64)) - 1;
        if (bits == 0) words_.clear();

        for (uint64_t p = 3; p * p <= limit; p += 2) {
            if (!test_odd(p)) continue;
            for (uint64_t m = p * p; m <= limit; m += 2 * p) clear_odd(m);
        }
        build_block_counts();
    }

    // Reconstitute a cache from an ascending list of primes that covers
    // [2, limit] completely (e.g. from a GBL1 cache file). Trusts the
    // list's completeness; ordering is the caller's contract.
    PrimeCache(const std::vector<uint64_t>& primes, uint64_t limit) : limit_(limit) {
        if (limit < 2)
            throw std::invalid_argument("PrimeCache: limit must be >= 2");
        if (primes.empty() || primes.front() != 2 || primes.back() < limit)
            throw std::invalid_argument("PrimeCache: prime list does not cover [2, limit]");
        const uint64_t bits = num_bits(limit);
        words_.assign((bits + 63) / 64, 0ULL);
        for (uint64_t p : primes) {
            if (p > limit) break;
            if (p == 2) continue;
            const uint64_t i = (p - 3) / 2;
            words_[i / 64] |= 1ULL << (i % 64);
        }
        build_block_counts();
    }

    uint64_t limit() const { return limit_; }

    // Primality for any n <= limit. Out-of-range n is an error:
    // the cache never guesses beyond what it sieved.
    bool is_prime(uint64_t n) const {
        if (n > limit_)
            throw std::out_of_range("PrimeCache::is_prime: n exceeds cache limit");
        if (n < 2) return false;
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        return test_odd(n);
    }

    // Exact count of primes <= x, for x <= limit.
    uint64_t prime_pi(uint64_t x) const {
        if (x > limit_)
            throw std::out_of_range("PrimeCache::prime_pi: x exceeds cache limit");
        if (x < 2) return 0;
        if (x == 2) return 1;
        const uint64_t odd = (x % 2 == 0) ? x - 1 : x;
        const uint64_t idx = (odd - 3) / 2;
        const std::size_t word = idx / 64;
        const std::size_t block = word / kBlockWords;
        uint64_t count = block_counts_[block];
        for (std::size_t w = block * kBlockWords; w < word; ++w)
            count += std::popcount(words_[w]);
        const uint64_t mask = (idx % 64 == 63) ? ~0ULL : ((1ULL << (idx % 64 + 1)) - 1);
        count += std::popcount(words_[word] & mask);
        return count;
    }

    // All primes <= bound (bound defaults to the full cache range).
    std::vector<uint64_t> primes_upto(uint64_t bound) const {
        if (bound > limit_)
            throw std::out_of_range("PrimeCache::primes_upto: bound exceeds cache limit");
        std::vector<uint64_t> ps;
        if (bound >= 2) ps.push_back(2);
        for (uint64_t p = 3; p <= bound; p += 2)
            if (test_odd(p)) ps.push_back(p);
        return ps;
    }
    std::vector<uint64_t> primes() const { return primes_upto(limit_); }

    // Cumulative counts at block boundaries; nondecreasing, last entry
    // equals the total number of primes <= limit.
    const std::vector<uint64_t>& block_counts() const { return block_counts_; }

private:
    uint64_t limit_;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> block_counts_;

    static uint64_t num_bits(uint64_t limit) {
        return limit < 3 ? 0 : (limit - 3) / 2 + 1;
    }
    bool test_odd(uint64_t n) const {
        const uint64_t i = (n - 3) / 2;
        return (words_[i / 64] >> (i % 64)) & 1ULL;
    }
    void clear_odd(uint64_t n) {
        const uint64_t i = (n - 3) / 2;
        words_[i / 64] &= ~(1ULL << (i % 64));
    }
    void build_block_counts() {
        const std::size_t nblocks = words_.size() / kBlockWords + 1;
        block_counts_.assign(nblocks + 1, 0);
        uint64_t running = 1; // the prime 2
        std::size_t b = 0;
        block_counts_[0] = running;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            running += std::popcount(words_[w]);
            if ((w + 1) % kBlockWords == 0) block_counts_[++b] = running;
        }
        while (b + 1 < block_counts_.size()) block_counts_[++b] = running;
    }
};

// Convenience free functions mirroring the cache members.
inline PrimeCache build_cache(uint64_t limit) { return PrimeCache(limit); }
inline uint64_t prime_pi(const PrimeCache& cache, uint64_t x) { return cache.prime_pi(x); }

// -------------------------------------------------------
// Segmented prime counting in (lo, hi], usable far beyond any full
// cache (hi up to 2^63 - 1).  Sieves [lo+1, hi] in ~256 KiB blocks
// against base primes <= sqrt(hi).  Independent calls on disjoint
// intervals may run concurrently.
// -------------------------------------------------------
inline uint64_t prime_pi_interval(uint64_t lo, uint64_t hi,
                                  const PrimeCache* base = nullptr) {
    if (lo > hi)
        throw std::invalid_argument("prime_pi_interval: lo must be <= hi");
    if (hi > (uint64_t(1) << 63) - 1)
        throw std::out_of_range("prime_pi_interval: hi exceeds 2^63 - 1");
    if (lo == hi || hi < 2) return 0;

    // Both endpoints inside a provided cache: answer by subtraction.
    if (base && hi <= base->limit())
        return base->prime_pi(hi) - base->prime_pi(lo);

    const uint64_t root = isqrt_u64(hi);
    std::vector<uint64_t> base_primes;
    if (base && base->limit() >= root) {
        base_primes = base->primes_upto(root);
    } else {
        base_primes = PrimeCache(std::max<uint64_t>(root, 2)).primes();
    }

    uint64_t count = 0;
    if (lo < 2) count += 1; // the prime 2
    // Sieve odd numbers only.
    uint64_t start = lo + 1;
    if (start < 3) start = 3;
    if (start % 2 == 0) ++start;
    if (start > hi) return count;

    constexpr uint64_t kSegmentOdds = 1u << 21; // 2 Mi odd slots ~ 256 KiB
    std::vector<uint64_t> seg;
    for (uint64_t seg_lo = start; seg_lo <= hi;) {
        const uint64_t odds_left = (hi - seg_lo) / 2 + 1;
        const uint64_t odds = std::min<uint64_t>(odds_left, kSegmentOdds);
        const uint64_t seg_hi = seg_lo + 2 * (odds - 1);
        seg.assign((odds + 63) / 64, ~0ULL);
        if (odds % 64 != 0) seg.back() &= (1ULL << (odds % 64)) - 1;

        for (uint64_t p : base_primes) {
            if (p == 2) continue;
            if (p * p > seg_hi) break;
            uint64_t m = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            if (m % 2 == 0) m += p;
            for (; m <= seg_hi; m += 2 * p) {
                const uint64_t i = (m - seg_lo) / 2;
                seg[i / 64] &= ~(1ULL << (i % 64));
            }
        }
        // A base prime itself may fall inside the segment; it was not
        // cleared above (m starts at p*p), so the count stays correct.
        for (uint64_t w : seg) count += std::popcount(w);
        // 1 is not prime: only reachable when lo < 1... seg starts at >= 3.
        if (seg_hi >= hi) break;
        seg_lo = seg_hi + 2;
    }
    return count;
}

// -------------------------------------------------------
// Factorization: ordered (prime, exponent) pairs, trial division by
// a 2/3/5 wheel up to 10^7, Miller-Rabin + Brent's rho beyond.
// Every input <= 10^12 is fully resolved by the trial stage.
// -------------------------------------------------------
struct Factorization {
    uint64_t n = 1;
    std::vector<std::pair<uint64_t, int>> factors; // primes strictly increasing
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}
inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                       23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                       23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Pollard's rho (Floyd cycle detection). Returns a nontrivial factor
// of composite odd n.
inline uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto step = [&](uint64_t x) {
            return static_cast<uint64_t>((static_cast<__uint128_t>(x) * x + c) % n);
        };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) { d = n; break; } // sterile cycle, retry with new c
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_recursive(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    uint64_t d = pollard_rho(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

} // namespace detail

inline Factorization factorize(uint64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    uint64_t m = n;
    auto push = [&](uint64_t p) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    };
    for (uint64_t p : {2ULL, 3ULL, 5ULL})
        while (m % p == 0) { push(p); m /= p; }
    // 2/3/5 wheel
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t p = 7;
    int wi = 0;
    constexpr uint64_t kTrialLimit = 10'000'000;
    while (p <= kTrialLimit && p * p <= m) {
        while (m % p == 0) { push(p); m /= p; }
        p += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (m > 1) {
        if (p * p > m) {
            push(m);
        } else {
            std::vector<uint64_t> rest;
            detail::factor_recursive(m, rest);
            std::sort(rest.begin(), rest.end());
            for (uint64_t q : rest) push(q);
        }
    }
    return f;
}

// Euler's totient from a factorization: prod p^(e-1) * (p - 1).
inline uint64_t totient(const Factorization& f) {
    uint64_t phi = 1;
    for (auto [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}
inline uint64_t totient(uint64_t n) { return totient(factorize(n)); }

// Number of distinct primes dividing n (0 for n = 1).
inline uint64_t distinct_prime_count(const Factorization& f) {
    return f.factors.size();
}
inline uint64_t distinct_prime_count(uint64_t n) { return factorize(n).factors.size(); }

// Moebius function: 0 on squareful n, else (-1)^(number of prime factors).
inline int moebius(uint64_t n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    const Factorization f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

// -------------------------------------------------------
// Goldbach partitions
// -------------------------------------------------------

// Count of unordered prime pairs (p, q), p <= q, p + q = n.
inline uint64_t goldbach_partitions(const PrimeCache& cache, uint64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("goldbach_partitions: n must be even and >= 4");
    if (n > cache.limit())
        throw std::out_of_range("goldbach_partitions: n exceeds cache limit");
    uint64_t count = 0;
    if (n == 4) return 1; // 2 + 2, the only pair using the even prime
    for (uint64_t p = 3; p <= n / 2; p += 2)
        if (cache.is_prime(p) && cache.is_prime(n - p)) ++count;
    return count;
}

// Cheap existence check: first prime p with n - p also prime, 0 if none.
inline uint64_t goldbach_first_partition(const PrimeCache& cache, uint64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("goldbach_first_partition: n must be even and >= 4");
    if (n > cache.limit())
        throw std::out_of_range("goldbach_first_partition: n exceeds cache limit");
    if (n == 4) return 2;
    for (uint64_t p = 3; p <= n / 2; p += 2)
        if (cache.is_prime(p) && cache.is_prime(n - p)) return p;
    return 0;
}

// -------------------------------------------------------
// Binary prime-cache file: magic "GBL1", little-endian u64 count,
// then that many little-endian u64 primes in ascending order.
// Lets CLI invocations skip re-sieving the base primes.
// -------------------------------------------------------

inline void write_primes_file(const std::string& path, const std::vector<uint64_t>& primes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open for writing: " + path);
    out.write("GBL1", 4);
    auto put_u64 = [&](uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        out.write(reinterpret_cast<const char*>(b), 8);
    };
    put_u64(primes.size());
    for (uint64_t p : primes) put_u64(p);
    if (!out) throw io_error("write failed: " + path);
}

inline std::vector<uint64_t> read_primes_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open for reading: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "GBL1", 4) != 0)
        throw data_error("bad magic in prime cache file: " + path);
    auto get_u64 = [&]() -> uint64_t {
        unsigned char b[8];
        in.read(reinterpret_cast<char*>(b), 8);
        if (!in) throw data_error("truncated prime cache file: " + path);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
        return v;
    };
    const uint64_t count = get_u64();
    std::vector<uint64_t> primes;
    primes.reserve(count);
    uint64_t prev = 0;
    for (uint64_t i = 0; i < count; ++i) {
        const uint64_t p = get_u64();
        if (p <= prev) throw data_error("prime cache file not strictly increasing: " + path);
        primes.push_back(p);
        prev = p;
    }
    return primes;
}

} // namespace gbl
