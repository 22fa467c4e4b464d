// acceptance.cpp
// End-to-end acceptance suite. Runs every criterion at its stated
// tolerance and prints one PASS/FAIL line each; exits nonzero if any
// fail. Comparisons against the claimed table values are findings
// (recorded, agreement not presumed); exactness, tolerances, and
// runtime budgets are the hard gates.

#include <chrono>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "gbl/cli_reporting.hpp"

using namespace gbl;
using Clock = std::chrono::steady_clock;

#ifndef GBL_DATA_DIR
#define GBL_DATA_DIR "data"
#endif

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

} // namespace

int main() {
    const std::string zeros_path = std::string(GBL_DATA_DIR) + "/zeta_zeros_1000.txt";

    // ---- criterion 1: sum(120) and sum(10^6), sieve included, < 5 s ----
    {
        const auto t0 = Clock::now();
        PrimeCache cache(1'000'000);
        const std::uint64_t s120 = sum_n(cache, 120).sum_n;
        const std::uint64_t s1e6 = sum_n(cache, 1'000'000).sum_n;
        const double secs = seconds_since(t0);
        report(1, s120 == 112 && s1e6 == 356'994 && secs < 5.0,
               fmt("sum(120)=%llu (want 112), sum(1e6)=%llu (want 356994), %.2fs",
                   (unsigned long long)s120, (unsigned long long)s1e6, secs));
    }

    PrimeCache cache(10'000'000); // shared by the remaining criteria

    // ---- criterion 2: the 15-row K table, exact integers, findings ----
    {
        const auto t0 = Clock::now();
        struct Row { std::uint64_t n, paper_k; };
        const Row rows[] = {{120, 6},  {128, 2},  {146, 2},  {166, 2},  {172, 3},
                            {188, 3},  {196, 3},  {206, 3},  {226, 3},  {256, 3},
                            {554, 5},  {664, 7},  {924, 12}, {4806, 5}, {9410, 63}};
        bool all_computed = true;
        int agreements = 0;
        for (const Row& r : rows) {
            try {
                const std::uint64_t k = k_exact(cache, r.n, 2);
                const bool agree = k == r.paper_k;
                agreements += agree;
                std::printf("      finding: K(%llu,%llu^3) computed=%llu claimed=%llu %s\n",
                            (unsigned long long)r.n, (unsigned long long)r.n,
                            (unsigned long long)k, (unsigned long long)r.paper_k,
                            agree ? "agree" : "DISAGREE");
            } catch (const std::exception& e) {
                all_computed = false;
                std::printf("      finding: K(%llu,...) FAILED: %s\n",
                            (unsigned long long)r.n, e.what());
            }
        }
        // the claimed K(166,120^3) row, taken literally
        std::printf("      finding: literal K(166, m=120^3) computed=%llu claimed=2\n",
                    (unsigned long long)k_exact_m(cache, 166, 120ULL * 120 * 120));
        const double secs = seconds_since(t0);
        report(2, all_computed && secs < 600.0,
               fmt("K table complete: 15/15 exact rows, %d/15 match the claimed values, %.2fs",
                   agreements, secs));
    }

    // ---- criterion 3: bound column at n = 120, 166, 9410 to +-0.01 ----
    {
        const bool ok = std::abs(k_table_bound(120.0) - 1.92) <= 0.01 &&
                        std::abs(k_table_bound(166.0) - 2.32) <= 0.01 &&
                        std::abs(k_table_bound(9410.0) - 39.51) <= 0.01;
        report(3, ok,
               fmt("bound(120)=%.4f~1.92 bound(166)=%.4f~2.32 bound(9410)=%.4f~39.51",
                   k_table_bound(120.0), k_table_bound(166.0), k_table_bound(9410.0)));
    }

    // ---- criterion 4: tail integral at 2 ----
    {
        const double v = tail_integral(2.0);
        report(4, std::abs(v - 0.14) <= 0.005, fmt("tail_integral(2)=%.6f (0.14 +- 0.005)", v));
    }

    // ---- criterion 5: explicit-formula fidelity, < 1 min ----
    {
        const auto t0 = Clock::now();
        const ZeroTable zeros = load_zeros(zeros_path, 1000);
        FormulaParams p;
        p.constant_mode = ConstantMode::classical;
        bool within5 = true;
        double err1000 = 0.0, err10 = 0.0;
        double worst = 0.0;
        for (double x : {100.0, 500.0, 1000.0, 5000.0, 10000.0}) {
            const double exact = static_cast<double>(cache.prime_pi((std::uint64_t)x));
            p.zero_count = 1000;
            const double e1 = std::abs(riemann_pi(x, p, zeros) - exact);
            p.zero_count = 10;
            const double e2 = std::abs(riemann_pi(x, p, zeros) - exact);
            err1000 += e1;
            err10 += e2;
            worst = std::max(worst, e1);
            if (e1 > 5.0) within5 = false;
        }
        const double secs = seconds_since(t0);
        report(5, within5 && err1000 / 5 < err10 / 5 && secs < 60.0,
               fmt("max |rpi - pi| = %.3f (<= 5), avg err 1000 zeros %.3f < 10 zeros %.3f, %.1fs",
                   worst, err1000 / 5, err10 / 5, secs));
    }

    // ---- criterion 6: Rosser-Schoenfeld scan on [59, 1e6], < 30 s ----
    {
        const auto t0 = Clock::now();
        const ScanResult r = rosser_schoenfeld_scan(cache, 59, 1'000'000);
        const double secs = seconds_since(t0);
        report(6, r.violations == 0 && secs < 30.0,
               fmt("checked %llu integers, %llu violations, %.2fs",
                   (unsigned long long)r.checked, (unsigned long long)r.violations, secs));
    }

    // ---- criterion 7: Lemma 1 scan over even n in [120, 1e6] ----
    {
        const ScanResult r = aux_inequality_scan(cache, AuxInequality::sum_ge_2pi, 120, 1'000'000);
        for (const LemmaFinding& f : r.violation_findings)
            std::printf("      finding: lemma1 violation at %s\n", f.input.c_str());
        report(7, r.violations == 0,
               fmt("sum(n) >= 2 pi(n) checked on %llu evens, %llu violations",
                   (unsigned long long)r.checked, (unsigned long long)r.violations));
    }

    // ---- criterion 8: Goldbach scan on [4, 1e7], < 5 min ----
    {
        const auto t0 = Clock::now();
        std::uint64_t without = 0;
        for (std::uint64_t n = 4; n <= 10'000'000; n += 2)
            if (goldbach_first_partition(cache, n) == 0) ++without;
        const double secs = seconds_since(t0);
        report(8, without == 0 && secs < 300.0,
               fmt("every even in [4, 1e7] has a partition (%llu without), %.1fs",
                   (unsigned long long)without, secs));
    }

    // ---- criterion 9: Euler products ----
    {
        const ProductEstimate sq = square_product(cache, 1'000'000);
        const ProductEstimate me = mertens_product(cache, 1'000'000);
        double from2 = 1.0, middle = 1.0, from3 = 1.0;
        std::uint64_t sandwich_failures = 0;
        for (std::uint64_t p = 2; p <= 1'000'000; ++p) {
            if (!cache.is_prime(p)) continue;
            const double pd = static_cast<double>(p);
            from2 *= 1.0 - 1.0 / (pd * pd);
            if (p >= 3) {
                middle *= 1.0 - 1.0 / ((pd - 1.0) * (pd - 1.0));
                from3 *= 1.0 - 1.0 / (pd * pd);
            }
            if (p >= 13 && !(from2 < middle && middle < from3)) ++sandwich_failures;
        }
        const bool ok = std::abs(sq.value - sq.target) < 1e-6 && sandwich_failures == 0 &&
                        me.relative_gap() < 0.01;
        report(9, ok,
               fmt("square gap %.2e (<1e-6), sandwich failures %llu, mertens gap %.2e (<1%%)",
                   std::abs(sq.value - sq.target), (unsigned long long)sandwich_failures,
                   me.relative_gap()));
    }

    // ---- criterion 10: SSC bounds at N in {1e4, 1e6}, cutoff 1e7 ----
    {
        bool completed = true;
        for (std::uint64_t N : {10'000ULL, 1'000'000ULL}) {
            const SscBounds b = ssc_bounds_check(cache, N, 10'000'000);
            if (!std::isfinite(b.ratio)) completed = false;
            std::printf("      finding: ssc N=%llu cutoff=1e7 ratio=%.4f lower_ok=%s upper_ok=%s\n",
                        (unsigned long long)N, b.ratio, b.lower_ok ? "true" : "false",
                        b.upper_ok ? "true" : "false");
        }
        report(10, completed, "ssc_bounds_check completed; booleans recorded as findings");
    }

    // ---- criterion 11: property suites ----
    {
        bool moebius_ok = true;
        for (std::uint64_t n = 1; n <= 10'000 && moebius_ok; ++n) {
            std::int64_t sum = 0;
            for (std::uint64_t d = 1; d * d <= n; ++d) {
                if (n % d != 0) continue;
                sum += moebius(d);
                if (d != n / d) sum += moebius(n / d);
            }
            if (sum != (n == 1 ? 1 : 0)) moebius_ok = false;
        }

        std::mt19937_64 rng(987654321);
        std::uniform_real_distribution<double> xs(0.05, 6.2);
        bool cosine_ok = true;
        for (int i = 0; i < 1000; ++i) {
            const double x = xs(rng);
            if (std::abs(std::sin(0.5 * x)) < 1e-6) continue;
            if (!cosine_sum_check(1 + rng() % 10'000, x, 1e-9).holds) cosine_ok = false;
        }

        bool lemma2_ok = true;
        for (int i = 0; i < 10'000; ++i) {
            const std::size_t len = 2 + rng() % 9;
            std::vector<std::uint64_t> seq(len);
            for (auto& v : seq) v = 1 + rng() % 1'000'000;
            std::sort(seq.rbegin(), seq.rend());
            if (!lemma2_check(seq, 1 + rng() % 7).holds) lemma2_ok = false;
        }
        bool lemma3_ok = true;
        for (int i = 1; i <= 100; ++i)
            for (std::uint64_t r = 2; r <= 100; ++r)
                if (!lemma3_check(i / 101.0, r).holds) lemma3_ok = false;

        std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.05, 30.0);
        bool conj_ok = true;
        for (int i = 0; i < 100; ++i) {
            const std::complex<double> z(re(rng), im(rng));
            const std::complex<double> a = li_complex(std::conj(z));
            const std::complex<double> b = std::conj(li_complex(z));
            if (!(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)))) conj_ok = false;
        }

        // CSV determinism: 1 worker vs 8 workers, byte-identical
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "gbl_acceptance";
        fs::remove_all(dir);
        fs::create_directories(dir);
        std::ostringstream sink;
        RunConfig base;
        base.subcommand = "verify-first";
        base.from = 120;
        base.to = 2000;
        base.cache_limit = 10'000;
        base.shard_size = 53;
        base.out_stream = &sink;
        RunConfig one = base, eight = base;
        one.workers = 1;
        one.out = (dir / "one.csv").string();
        eight.workers = 8;
        eight.out = (dir / "eight.csv").string();
        bool determinism_ok = run(one) == 0 && run(eight) == 0;
        if (determinism_ok) {
            std::ifstream a(one.out, std::ios::binary), b(eight.out, std::ios::binary);
            std::stringstream sa, sb;
            sa << a.rdbuf();
            sb << b.rdbuf();
            determinism_ok = sa.str() == sb.str() && !sa.str().empty();
        }
        fs::remove_all(dir);

        report(11, moebius_ok && cosine_ok && lemma2_ok && lemma3_ok && conj_ok && determinism_ok,
               fmt("moebius %s, cosine %s, lemma2 %s, lemma3 %s, conj-symmetry %s, determinism %s",
                   moebius_ok ? "ok" : "FAIL", cosine_ok ? "ok" : "FAIL",
                   lemma2_ok ? "ok" : "FAIL", lemma3_ok ? "ok" : "FAIL",
                   conj_ok ? "ok" : "FAIL", determinism_ok ? "ok" : "FAIL"));
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
