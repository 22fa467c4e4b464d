// gbl: command-line front end for the Goldbach/explicit-formula toolkit.
//
// Subcommands: pi, riemann-pi, sum, k, l, verify-first, verify-second,
// products, lemmas, goldbach-scan, report. Flags may also come from a
// plain key=value config file via --config (CLI flags win). GBL_ZEROS
// overrides the default zeros table path.

#include <CLI11.hpp>

#include "gbl/cli_reporting.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Goldbach conjecture verification toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "plain key=value config file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    gbl::RunConfig cfg;

    // shared flags, attached per subcommand below
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--zeros-file", cfg.zeros_file, "zeros table (one value per line)");
        sub->add_option("--num-zeros", cfg.num_zeros, "zeros used per Li-sum");
        sub->add_option("--limit", cfg.cache_limit, "prime cache limit");
        sub->add_option("--prime-cache", cfg.prime_cache_path, "GBL1 binary prime cache file");
        sub->add_option("--workers", cfg.workers, "worker thread count");
    };

    CLI::App* pi = app.add_subcommand("pi", "exact prime count by sieve");
    pi->add_option("--x", cfg.n, "argument")->required();
    add_common(pi);

    CLI::App* rpi = app.add_subcommand("riemann-pi", "truncated explicit formula for pi(x)");
    rpi->add_option("--x", cfg.x, "argument")->required();
    rpi->add_option("--rmax", cfg.r_max, "cap on the Moebius sum index r");
    rpi->add_option("--constant", cfg.constant_mode, "paper|classical");
    rpi->add_option("--tol", cfg.tol, "quadrature tolerance");
    add_common(rpi);

    CLI::App* sum = app.add_subcommand("sum", "sum(n) decomposition");
    sum->add_option("--n", cfg.n, "even n >= 4")->required();
    add_common(sum);

    CLI::App* k = app.add_subcommand("k", "K(n, n^s): primes in (n^(s+1), n^(s+1)+sum(n)]");
    k->add_option("--n", cfg.n, "even n >= 4")->required();
    k->add_option("--s", cfg.s, "exponent s >= 2");
    add_common(k);

    CLI::App* l = app.add_subcommand("l", "L(n) interval system and exact count");
    l->add_option("--n", cfg.n, "even n >= 120")->required();
    l->add_option("--lo-offset", cfg.lo_offset, "low endpoint nudge (default +1)");
    l->add_option("--hi-offset", cfg.hi_offset, "high endpoint nudge (default -1)");
    add_common(l);

    CLI::App* vf = app.add_subcommand("verify-first", "scan the first conjecture over a range");
    vf->add_option("--from", cfg.from, "first even n (>= 120)")->required();
    vf->add_option("--to", cfg.to, "last even n")->required();
    vf->add_option("--step", cfg.step, "step (must be 2)");
    vf->add_option("--s", cfg.s, "exponent s >= 2");
    vf->add_option("--out", cfg.out, "output CSV")->required();
    vf->add_option("--checkpoint-every", cfg.checkpoint_every, "rows between checkpoints");
    vf->add_option("--shard-size", cfg.shard_size, "evens per work unit");
    vf->add_flag("--resume", cfg.resume, "resume from checkpoint");
    vf->add_option("--halt-after-rows", cfg.halt_after_rows, "stop early (testing)")
        ->group("");
    vf->add_option("--lo-offset", cfg.lo_offset, "low endpoint nudge");
    vf->add_option("--hi-offset", cfg.hi_offset, "high endpoint nudge");
    add_common(vf);

    CLI::App* vs = app.add_subcommand("verify-second", "second conjecture ratio and bounds");
    vs->add_option("--n", cfg.n, "even N >= 4")->required();
    vs->add_option("--cutoff", cfg.cutoff, "prime cutoff for both products");
    vs->add_option("--slack", cfg.slack, "the (1 + O(1/log N)) factor");
    vs->add_option("--out", cfg.out, "output CSV");
    add_common(vs);

    CLI::App* pr = app.add_subcommand("products", "partial Euler products vs asymptotics");
    pr->add_option("--x", cfg.n, "prime cutoff")->required();
    pr->add_option("--which", cfg.which, "mertens|plus|square|twin|sandwich|all");
    pr->add_option("--out", cfg.out, "output CSV");
    add_common(pr);

    CLI::App* lm = app.add_subcommand("lemmas", "lemma audit suites");
    lm->add_option("--suite", cfg.suite,
                   "all|lemma1|lemma2|lemma3|lemma9|lemma10|theorem1|cosine|aux");
    lm->add_option("--out", cfg.out, "findings CSV");
    lm->add_option("--tol", cfg.tol, "quadrature tolerance");
    lm->add_option("--constant", cfg.constant_mode, "paper|classical");
    add_common(lm);

    CLI::App* gs = app.add_subcommand("goldbach-scan", "partition existence over a range");
    gs->add_option("--from", cfg.from, "first even n (>= 4)")->required();
    gs->add_option("--to", cfg.to, "last even n")->required();
    gs->add_flag("--count", cfg.count_partitions, "full partition counts (slower)");
    gs->add_option("--out", cfg.out, "per-n CSV");
    add_common(gs);

    CLI::App* rp = app.add_subcommand("report", "project CSV columns into plot data");
    rp->add_option("--in", cfg.in, "input CSV")->required();
    rp->add_option("--x", cfg.x_field, "x column");
    rp->add_option("--y", cfg.y_fields, "comma-separated y columns")->required();
    rp->add_option("--out", cfg.out, "output plot file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        cfg.subcommand = sub->get_name();
        return gbl::run(cfg);
    }
    return 1;
}
