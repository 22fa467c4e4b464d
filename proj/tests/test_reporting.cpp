#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gbl/cli_reporting.hpp"

using namespace gbl;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() / "gbl_test_reporting";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};
} // namespace

TEST_CASE("csv escaping follows RFC 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("with,comma") == "\"with,comma\"");
    CHECK(csv_escape("with\"quote") == "\"with\"\"quote\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_line({"a", "b,c", "d"}) == "a,\"b,c\",d\n");
}

TEST_CASE("ReportRow rejects non-finite numerics and renders booleans") {
    ReportRow row;
    row.set("ok", true);
    row.set("no", false);
    CHECK(*row.find("ok") == "true");
    CHECK(*row.find("no") == "false");
    CHECK_THROWS_AS(row.set("bad", std::nan("")), data_error);
    CHECK_THROWS_AS(row.set("bad", std::numeric_limits<double>::infinity()), data_error);
}

TEST_CASE("csv read round trip with quoted fields") {
    TempDir tmp;
    const std::string path = tmp.path("roundtrip.csv");
    {
        std::ofstream out(path, std::ios::binary);
        out << csv_line({"n", "notes"});
        out << csv_line({"12", "plain"});
        out << csv_line({"14", "has,comma and \"quotes\""});
    }
    const CsvTable table = read_csv(path);
    REQUIRE(table.header == std::vector<std::string>{"n", "notes"});
    REQUIRE(table.rows.size() == 2);
    CHECK(*table.rows[1].find("notes") == "has,comma and \"quotes\"");
}

TEST_CASE("emit_plot_data: projection, header-only, missing fields") {
    TempDir tmp;
    std::vector<ReportRow> rows(2);
    rows[0].set("n", std::uint64_t(120));
    rows[0].set("K", std::uint64_t(6));
    rows[1].set("n", std::uint64_t(122));
    rows[1].set("K", std::uint64_t(6));
    const std::string path = tmp.path("plot.dat");
    emit_plot_data(rows, "n", {"K"}, path);
    CHECK(slurp(path) == "# n K\n120 6\n122 6\n");

    emit_plot_data({}, "n", {"K"}, path);
    CHECK(slurp(path) == "# n K\n");

    CHECK_THROWS_AS(emit_plot_data(rows, "n", {"missing"}, path), data_error);
}

TEST_CASE("sharded_ordered_run emits shards in order for any worker count") {
    for (unsigned workers : {1u, 2u, 8u}) {
        std::vector<std::uint64_t> seen;
        const std::function<std::vector<std::uint64_t>(const ShardRange&)> work =
            [](const ShardRange& r) {
                std::vector<std::uint64_t> out;
                for (std::uint64_t i = 0; i < r.count; ++i)
                    out.push_back(r.begin + i * r.step);
                return out;
            };
        const std::function<bool(std::uint64_t, std::vector<std::uint64_t>&&)> emit =
            [&](std::uint64_t, std::vector<std::uint64_t>&& vs) {
                seen.insert(seen.end(), vs.begin(), vs.end());
                return true;
            };
        sharded_ordered_run<std::vector<std::uint64_t>>(100, 757, 2, 10, workers, work, emit);
        REQUIRE(seen.size() == 757);
        for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == 100 + 2 * i);
    }
}

TEST_CASE("verify-first CSV: row count, determinism under 1 vs 8 workers") {
    TempDir tmp;
    RunConfig base;
    base.subcommand = "verify-first";
    base.from = 120;
    base.to = 1000;
    base.s = 2;
    base.cache_limit = 10'000;
    base.shard_size = 37; // force many shards
    std::ostringstream sink;
    base.out_stream = &sink;

    RunConfig one = base;
    one.workers = 1;
    one.out = tmp.path("one.csv");
    REQUIRE(run(one) == 0);

    RunConfig eight = base;
    eight.workers = 8;
    eight.out = tmp.path("eight.csv");
    REQUIRE(run(eight) == 0);

    const std::string a = slurp(one.out);
    const std::string b = slurp(eight.out);
    CHECK(a == b); // byte-identical

    // header + 441 rows
    std::size_t lines = 0;
    for (char c : a)
        if (c == '\n') ++lines;
    CHECK(lines == 442);
    CHECK(a.substr(0, a.find('\n')) == "n,s,sum_n,phi,D,pi_n,mn,K,L,g_n,pass,notes");
}

TEST_CASE("verify-first: interrupt plus resume reproduces the full CSV") {
    TempDir tmp;
    RunConfig full;
    full.subcommand = "verify-first";
    full.from = 120;
    full.to = 500;
    full.cache_limit = 10'000;
    full.shard_size = 13;
    full.checkpoint_every = 50;
    std::ostringstream sink;
    full.out_stream = &sink;
    full.out = tmp.path("full.csv");
    REQUIRE(run(full) == 0);
    CHECK(!std::filesystem::exists(full.out + ".ckpt")); // removed when complete

    RunConfig half = full;
    half.out = tmp.path("resumed.csv");
    half.halt_after_rows = 77; // not aligned with checkpoints or shards
    REQUIRE(run(half) == 0);
    CHECK(std::filesystem::exists(half.out + ".ckpt"));

    RunConfig again = half;
    again.halt_after_rows = 0;
    again.resume = true;
    REQUIRE(run(again) == 0);

    CHECK(slurp(full.out) == slurp(half.out));
    CHECK(!std::filesystem::exists(half.out + ".ckpt"));

    // halting exactly on a checkpoint boundary resumes cleanly too
    RunConfig edge = full;
    edge.out = tmp.path("edge.csv");
    edge.halt_after_rows = 100; // 2 * checkpoint_every
    REQUIRE(run(edge) == 0);
    RunConfig edge2 = edge;
    edge2.halt_after_rows = 0;
    edge2.resume = true;
    REQUIRE(run(edge2) == 0);
    CHECK(slurp(full.out) == slurp(edge.out));
}

TEST_CASE("verify-first rejects bad ranges") {
    RunConfig c;
    c.subcommand = "verify-first";
    c.out = "unused.csv";
    std::ostringstream sink;
    c.out_stream = &sink;
    c.from = 100; // below 120
    c.to = 200;
    CHECK(run(c) == 1);
    c.from = 121; // odd
    CHECK(run(c) == 1);
    c.from = 120;
    c.step = 4; // spec requires 2
    CHECK(run(c) == 1);
}

TEST_CASE("goldbach-scan and products subcommands produce their CSVs") {
    TempDir tmp;
    std::ostringstream sink;

    RunConfig gs;
    gs.subcommand = "goldbach-scan";
    gs.from = 4;
    gs.to = 5000;
    gs.cache_limit = 5000;
    gs.count_partitions = true;
    gs.out = tmp.path("goldbach.csv");
    gs.out_stream = &sink;
    REQUIRE(run(gs) == 0);
    const CsvTable g = read_csv(gs.out);
    CHECK(g.rows.size() == (5000 - 4) / 2 + 1);
    CHECK(*g.rows[3].find("n") == "10");
    CHECK(*g.rows[3].find("g_n") == "2");

    RunConfig pr;
    pr.subcommand = "products";
    pr.n = 100'000;
    pr.which = "all";
    pr.cache_limit = 100'000;
    pr.out = tmp.path("products.csv");
    pr.out_stream = &sink;
    REQUIRE(run(pr) == 0);
    const CsvTable p = read_csv(pr.out);
    CHECK(p.rows.size() == 5); // mertens, plus, square, twin, sandwich
}

TEST_CASE("report derives rs_lower_bound from the n column") {
    TempDir tmp;
    std::ostringstream sink;

    RunConfig vf;
    vf.subcommand = "verify-first";
    vf.from = 120;
    vf.to = 140;
    vf.cache_limit = 10'000;
    vf.out = tmp.path("rows.csv");
    vf.out_stream = &sink;
    REQUIRE(run(vf) == 0);

    RunConfig rp;
    rp.subcommand = "report";
    rp.in = vf.out;
    rp.x_field = "n";
    rp.y_fields = "K,rs_lower_bound";
    rp.out = tmp.path("plot.dat");
    rp.out_stream = &sink;
    REQUIRE(run(rp) == 0);
    const std::string plot = slurp(rp.out);
    CHECK(plot.substr(0, plot.find('\n')) == "# n K rs_lower_bound");
    // 11 rows + header
    std::size_t lines = 0;
    for (char c : plot)
        if (c == '\n') ++lines;
    CHECK(lines == 12);

    // missing y columns that cannot be derived are data errors (exit 2)
    RunConfig bad = rp;
    bad.y_fields = "K,unknown_column";
    CHECK(run(bad) == 2);
}

TEST_CASE("re-running subcommands yields byte-identical CSVs") {
    TempDir tmp;
    std::ostringstream sink;

    RunConfig lm;
    lm.subcommand = "lemmas";
    lm.suite = "lemma2"; // seeded rng: must reproduce exactly
    lm.cache_limit = 1000;
    lm.out_stream = &sink;
    lm.out = tmp.path("a.csv");
    REQUIRE(run(lm) == 0);
    lm.out = tmp.path("b.csv");
    REQUIRE(run(lm) == 0);
    CHECK(slurp(tmp.path("a.csv")) == slurp(tmp.path("b.csv")));

    RunConfig gs;
    gs.subcommand = "goldbach-scan";
    gs.from = 4;
    gs.to = 2000;
    gs.cache_limit = 2000;
    gs.out_stream = &sink;
    gs.out = tmp.path("g1.csv");
    REQUIRE(run(gs) == 0);
    gs.out = tmp.path("g2.csv");
    REQUIRE(run(gs) == 0);
    CHECK(slurp(tmp.path("g1.csv")) == slurp(tmp.path("g2.csv")));
}

TEST_CASE("lemmas subcommand writes the findings CSV") {
    TempDir tmp;
    std::ostringstream sink;
    RunConfig lm;
    lm.subcommand = "lemmas";
    lm.suite = "lemma3";
    lm.cache_limit = 1000;
    lm.out = tmp.path("findings.csv");
    lm.out_stream = &sink;
    REQUIRE(run(lm) == 0);
    const CsvTable t = read_csv(lm.out);
    CHECK(t.header ==
          std::vector<std::string>{"lemma_id", "input", "holds", "lhs", "rhs", "margin"});
    CHECK(t.rows.size() == 10'000); // the 100x100 grid
    for (std::size_t i = 0; i < t.rows.size(); i += 997)
        CHECK(*t.rows[i].find("holds") == "true");

    RunConfig unknown = lm;
    unknown.suite = "nonsense";
    CHECK(run(unknown) == 1);
}

TEST_CASE("GBL1 prime cache file is honored by subcommands") {
    TempDir tmp;
    std::ostringstream sink;
    RunConfig c;
    c.subcommand = "pi";
    c.n = 100'000;
    c.cache_limit = 100'000;
    c.prime_cache_path = tmp.path("primes.gbl1");
    c.out_stream = &sink;
    REQUIRE(run(c) == 0);
    CHECK(std::filesystem::exists(c.prime_cache_path));
    const auto size1 = std::filesystem::file_size(c.prime_cache_path);
    // second run loads the cache instead of re-sieving and keeps it intact
    REQUIRE(run(c) == 0);
    CHECK(std::filesystem::file_size(c.prime_cache_path) == size1);
    CHECK(sink.str().find("pi(100000) = 9592") != std::string::npos);
}
