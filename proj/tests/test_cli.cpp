#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gridfrechet/errors.hpp"
#include "gridfrechet/rational.hpp"
#include "gridfrechet/walk_io.hpp"
#include "test_util.hpp"

using namespace gridfrechet;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
    static const struct Dir {
        fs::path path;
        Dir() : path(fs::temp_directory_path() /
                     ("gridfrechet_cli_test_" + std::to_string(::getpid()))) {
            fs::create_directories(path);
        }
        ~Dir() {
            std::error_code ec;
            fs::remove_all(path, ec);
        }
    } dir;
    return dir.path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string path_in_scratch(const std::string& name) { return (scratch() / name).string(); }

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = path_in_scratch("stdout" + std::to_string(counter) + ".txt");
    const std::string err_path = path_in_scratch("stderr" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + GRIDFRECHET_CLI_PATH + "\" " + args + " > \"" +
                            out_path + "\" 2> \"" + err_path + "\"";
    const int rc = std::system(cmd.c_str());
    CliResult r;
    REQUIRE(rc != -1);
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find('\n', i);
        if (j == std::string::npos) j = text.size();
        out.push_back(text.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& row) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= row.size()) {
        std::size_t j = row.find(',', i);
        if (j == std::string::npos) j = row.size();
        out.push_back(row.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("walk text round-trips bit-exactly") {
    std::uint64_t seed = 31;
    for (int it = 0; it < 400; ++it) {
        const std::size_t d = 1 + it % 5;
        const std::size_t n = 1 + (seed += 0x9E3779B97F4A7C15ULL) % 120;
        const GridWalk w = testutil::random_walk(d, n, seed);
        const std::string text = serialize_walk(w);
        const GridWalk back = parse_walk(text);
        REQUIRE(back.size() == w.size());
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(back.vertices[i] == w.vertices[i]);
        CHECK(serialize_walk(back) == text);
    }
    CHECK(serialize_walk(testutil::make_walk({{0}, {1}})) == "gw 1 2\n0\n1\n");
}

TEST_CASE("walk parser accepts sloppy whitespace and CRLF") {
    const GridWalk w = parse_walk("gw 1 2\r\n0\r\n1\r\n\r\n\n");
    REQUIRE(w.size() == 2);
    CHECK(w.vertices[1].coords == std::vector<std::int64_t>{1});

    const GridWalk t = parse_walk("gw  2\t3\n 0  0\n0 1 \n\t1\t1\n");
    REQUIRE(t.size() == 3);
    CHECK(serialize_walk(t) == "gw 2 3\n0 0\n0 1\n1 1\n");

    // the coordinate cap itself is representable
    CHECK(parse_walk("gw 1 1\n1099511627776\n").size() == 1);
}

TEST_CASE("walk parser reports precise line diagnostics") {
    CHECK_THROWS_WITH_AS(parse_walk(""), "line 1: missing header 'gw <d> <n>'", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2\n0 0\n"),
                         "line 1: expected header 'gw <d> <n>', got 'gw 2'", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("xx 2 1\n0 0\n"),
                         "line 1: expected header 'gw <d> <n>', got 'xx 2 1'", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 0 1\n\n"), "line 1: dimension must be in [1, 10^6]",
                         input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 1 0\n"), "line 1: vertex count must be in [1, 10^9]",
                         input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 1 1000000001\n"),
                         "line 1: vertex count must be in [1, 10^9]", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw x 1\n0\n"),
                         "line 1: dimension 'x' is not a valid integer", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2 3\n0 0\n0 1\n"),
                         "line 4: expected 3 vertex lines, found only 2", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2 2\n0 0 0\n0 1\n"),
                         "line 2: expected 2 coordinates, got 3", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2 2\n0 0\nx 1\n"),
                         "line 3: coordinate 'x' is not a valid integer", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2 2\n0 0\n0 2\n"),
                         "line 3: non-unit step from the previous vertex", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 2 2\n0 0\n0 1\n0 2\n"),
                         "line 4: trailing content after the declared 2 vertices", input_error);
    CHECK_THROWS_WITH_AS(parse_walk("gw 1 1\n1099511627777\n"),
                         "line 2: coordinate 1099511627777 out of range", input_error);
}

TEST_CASE("walk files prefix diagnostics with the path") {
    const std::string good = path_in_scratch("roundtrip.gw");
    const GridWalk w = testutil::make_walk({{4, -1}, {4, 0}, {5, 0}});
    write_walk_file(good, w);
    const GridWalk back = read_walk_file(good);
    REQUIRE(back.size() == 3);
    CHECK(back.vertices[2] == w.vertices[2]);

    const std::string missing = path_in_scratch("no_such.gw");
    CHECK_THROWS_WITH_AS(read_walk_file(missing), (missing + ": cannot open for reading").c_str(),
                         input_error);
    const std::string bad = path_in_scratch("bad.gw");
    write_file(bad, "gw 1 2\n0\n5\n");
    CHECK_THROWS_WITH_AS(read_walk_file(bad),
                         (bad + ": line 3: non-unit step from the previous vertex").c_str(),
                         input_error);
    CHECK_THROWS_AS(write_walk_file(path_in_scratch("no_dir/x.gw"), w), input_error);
}

TEST_CASE("cli distance commands on parallel lines") {
    const std::string p = path_in_scratch("line0.gw");
    const std::string q = path_in_scratch("line10.gw");
    write_file(p, "gw 2 4\n0 0\n1 0\n2 0\n3 0\n");
    write_file(q, "gw 2 4\n0 10\n1 10\n2 10\n3 10\n");

    auto r = run_cli("dist --algo exact \"" + p + "\" \"" + q + "\"");
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
    CHECK(r.err.empty());

    r = run_cli("dist --algo exact --metric linf \"" + p + "\" \"" + q + "\"");
    CHECK(r.out == "10\n");

    r = run_cli("dist --algo exact \"" + p + "\" \"" + p + "\"");
    CHECK(r.out == "0\n");

    r = run_cli("dist --algo approx --eps 1/4 \"" + p + "\" \"" + q + "\"");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    const std::int64_t v = std::stoll(ls[0]);
    CHECK(v >= 10);
    CHECK(v <= 12);
    const Rational lower = Rational(v) / Rational(5, 4);
    CHECK(ls[1] == "interval [" + lower.str() + ", " + ls[0] + "]");

    r = run_cli("dist --algo continuous --eps 1/10 \"" + p + "\" \"" + q + "\"");
    CHECK(r.code == 0);
    ls = lines_of(r.out);
    REQUIRE(ls.size() == 1);
    const Rational c = Rational::parse(ls[0]);
    CHECK(c >= Rational(10));
    CHECK(c <= Rational(11));
    CHECK(c.den() <= 2);
}

TEST_CASE("cli decide certifies around the true distance") {
    const std::string p = path_in_scratch("dec_p.gw");
    const std::string q = path_in_scratch("dec_q.gw");
    write_file(p, "gw 2 4\n0 0\n1 0\n2 0\n3 0\n");
    write_file(q, "gw 2 4\n0 10\n1 10\n2 10\n3 10\n");

    CHECK(run_cli("decide --delta 5 --eps 1/10 \"" + p + "\" \"" + q + "\"").out == "GT\n");
    CHECK(run_cli("decide --delta 9 --eps 1/10 \"" + p + "\" \"" + q + "\"").out == "GT\n");
    CHECK(run_cli("decide --delta 10 --eps 1/10 \"" + p + "\" \"" + q + "\"").out == "LE\n");
    CHECK(run_cli("decide --delta 10 --eps 1/10 --metric linf \"" + p + "\" \"" + q + "\"").out ==
          "LE\n");
    for (const char* m : {"dp", "cells"}) {
        CHECK(run_cli("decide --delta 5 --eps 1/10 --force-method " + std::string(m) + " \"" + p +
                      "\" \"" + q + "\"")
                  .out == "GT\n");
        CHECK(run_cli("decide --delta 10 --eps 1/10 --force-method " + std::string(m) + " \"" + p +
                      "\" \"" + q + "\"")
                  .out == "LE\n");
    }
}

TEST_CASE("cli gen band writes the canonical file") {
    const std::string out = path_in_scratch("band.gw");
    const auto r = run_cli("gen band --d 2 --a 2 --w 1 --lambda 1 -o \"" + out + "\"");
    CHECK(r.code == 0);
    CHECK(r.out == "n=7\nlambda=1\nbbox=[0,3]x[0,3]\n");
    CHECK(slurp(out) == "gw 2 7\n3 0\n2 0\n2 1\n1 1\n1 2\n0 2\n0 3\n");

    const std::string neg = path_in_scratch("band_neg.gw");
    const auto rn = run_cli("gen band --d 2 --a 2 --w 1 --negative -o \"" + neg + "\"");
    CHECK(rn.code == 0);
    CHECK(slurp(neg) == "gw 2 7\n-3 0\n-2 0\n-2 -1\n-1 -1\n-1 -2\n0 -2\n0 -3\n");
}

TEST_CASE("cli gen random is seed-deterministic") {
    const std::string a = path_in_scratch("rand_a.gw");
    const std::string b = path_in_scratch("rand_b.gw");
    const std::string c = path_in_scratch("rand_c.gw");
    const auto ra = run_cli("gen random --d 3 --n 500 --lambda 2 --seed 9 -o \"" + a + "\"");
    const auto rb = run_cli("gen random --d 3 --n 500 --lambda 2 --seed 9 -o \"" + b + "\"");
    const auto rc = run_cli("gen random --d 3 --n 500 --lambda 2 --seed 10 -o \"" + c + "\"");
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
    CHECK(contains(ra.out, "n=500\n"));
    CHECK(rc.code == 0);
}

TEST_CASE("cli gen embed and scale1d") {
    const std::string origin = path_in_scratch("origin.gw");
    const std::string signal = path_in_scratch("signal.gw");
    write_file(origin, "gw 1 2\n0\n1\n");
    write_file(signal, "gw 1 2\n0\n1\n");
    const std::string out = path_in_scratch("embed.gw");
    const auto r = run_cli("gen embed --origin \"" + origin + "\" --signal \"" + signal +
                           "\" --cuts 1 -o \"" + out + "\"");
    CHECK(r.code == 0);
    CHECK(slurp(out) == "gw 2 3\n0 0\n0 1\n1 1\n");
    CHECK(r.out == "n=3\nlambda=1\nbbox=[0,1]x[0,1]\n");

    const std::string sc = path_in_scratch("scaled.gw");
    const auto rs = run_cli("gen scale1d --values 0,2,-1 --C 2 -o \"" + sc + "\"");
    CHECK(rs.code == 0);
    CHECK(slurp(sc) == "gw 1 11\n0\n1\n2\n3\n4\n3\n2\n1\n0\n-1\n-2\n");
    CHECK(contains(rs.out, "n=11\n"));
    CHECK(contains(rs.out, "bbox=[-2,4]\n"));
}

TEST_CASE("cli validate prints construction parameters") {
    auto r = run_cli("validate --d 3 --lambda 1 --eps 1/2 --N 2000");
    CHECK(r.code == 0);
    CHECK(r.out == "a=190\nw=95\nfeasible=true\nthreshold=5.85607e-07\n");

    r = run_cli("validate --d 3 --lambda 1 --eps 1/1000000000 --N 2000");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "a=4242641\n"));
    CHECK(contains(r.out, "w=1\n"));
    CHECK(contains(r.out, "feasible=false\n"));

    r = run_cli("validate --d 2 --lambda 1 --eps 1/2 --N 2000");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error:"));
}

TEST_CASE("cli pipeline stays consistent across commands") {
    std::uint64_t delta_seed = 17;
    for (int it = 0; it < 6; ++it) {
        const std::string p = path_in_scratch("pipe_p" + std::to_string(it) + ".gw");
        const std::string q = path_in_scratch("pipe_q" + std::to_string(it) + ".gw");
        REQUIRE(run_cli("gen random --d 2 --n 60 --lambda 2 --seed " + std::to_string(it) +
                        " -o \"" + p + "\"")
                    .code == 0);
        REQUIRE(run_cli("gen random --d 2 --n 55 --lambda 2 --seed " +
                        std::to_string(1000 + it) + " -o \"" + q + "\"")
                    .code == 0);

        const auto ex = run_cli("dist --algo exact \"" + p + "\" \"" + q + "\"");
        REQUIRE(ex.code == 0);
        const std::int64_t x = std::stoll(ex.out);

        const auto ap = run_cli("dist --algo approx --eps 1/4 \"" + p + "\" \"" + q + "\"");
        REQUIRE(ap.code == 0);
        const std::int64_t v = std::stoll(lines_of(ap.out)[0]);
        CHECK(v >= x);
        CHECK(4 * v <= 5 * x);

        CHECK(run_cli("decide --delta " + std::to_string(x) + " --eps 1/1000 \"" + p + "\" \"" +
                      q + "\"")
                  .out == "LE\n");
        if (x > 0) {
            CHECK(run_cli("decide --delta " + std::to_string(x - 1) + " --eps 1/1000 \"" + p +
                          "\" \"" + q + "\"")
                      .out == "GT\n");
        }

        // both decision procedures agree everywhere, not only at the distance
        const std::int64_t probe = (delta_seed = delta_seed * 6364136223846793005ULL + 1) %
                                       (2 * static_cast<std::uint64_t>(x) + 3);
        const std::string tail = " --eps 1/3 \"" + p + "\" \"" + q + "\"";
        const auto dp = run_cli("decide --delta " + std::to_string(probe) + " --force-method dp" +
                                tail);
        const auto cells = run_cli("decide --delta " + std::to_string(probe) +
                                   " --force-method cells" + tail);
        CHECK(dp.out == cells.out);
        CHECK(run_cli("decide --delta " + std::to_string(probe) + tail).out == dp.out);
    }
}

TEST_CASE("cli reports input and dimension errors by exit code") {
    const std::string p1 = path_in_scratch("err_1d.gw");
    const std::string p2 = path_in_scratch("err_2d.gw");
    const std::string broken = path_in_scratch("err_broken.gw");
    write_file(p1, "gw 1 2\n0\n1\n");
    write_file(p2, "gw 2 2\n0 0\n0 1\n");
    write_file(broken, "gw 1 2\n0\n2\n");

    auto r = run_cli("dist --algo exact \"" + path_in_scratch("absent.gw") + "\" \"" + p1 + "\"");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "cannot open for reading"));

    r = run_cli("dist --algo exact \"" + broken + "\" \"" + p1 + "\"");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 3: non-unit step"));

    r = run_cli("dist --algo exact \"" + p1 + "\" \"" + p2 + "\"");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "error:"));

    CHECK(run_cli("dist --algo approx \"" + p1 + "\" \"" + p1 + "\"").code == 2);
    CHECK(run_cli("dist --algo bogus \"" + p1 + "\" \"" + p1 + "\"").code == 2);
    CHECK(run_cli("decide --eps 1/2 \"" + p1 + "\" \"" + p1 + "\"").code == 2);
    CHECK(run_cli("decide --delta -1 --eps 1/2 \"" + p1 + "\" \"" + p1 + "\"").code == 2);
    CHECK(run_cli("gen band --d 1 --a 2 --w 1 -o \"" + path_in_scratch("x.gw") + "\"").code == 2);
    CHECK(run_cli("gen scale1d --values 0,,1 --C 2 -o \"" + path_in_scratch("y.gw") + "\"").code ==
          2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("cli bench emits csv rows and slope lines") {
    auto r = run_cli("bench --d 2 --sizes 16,32 --seeds 2 --eps 1/2 --algo both");
    CHECK(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 9);  // header + 2 sizes * 2 seeds * 2 algos
    CHECK(rows[0] == "d,n,m,lambda,eps,algo,value,decider_calls,wall_time_ns,seed");

    // approx stays within (1 + eps) of the exact value on every instance
    std::vector<std::int64_t> exact_vals;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_csv(rows[i]);
        REQUIRE(f.size() == 10);
        CHECK(f[0] == "2");
        CHECK((f[1] == "16" || f[1] == "32"));
        CHECK(f[1] == f[2]);
        CHECK(f[4] == "1/2");
        const std::int64_t value = std::stoll(f[6]);
        CHECK(value >= 0);
        if (f[5] == "exact") {
            exact_vals.push_back(value);
            CHECK(f[7] == "0");
        } else {
            REQUIRE(f[5] == "approx");
            REQUIRE(!exact_vals.empty());
            const std::int64_t ex = exact_vals.back();
            CHECK(value >= ex);
            CHECK(2 * value <= 3 * ex);  // value <= (1+1/2) * exact
            CHECK(std::stoll(f[7]) >= 1);
        }
        CHECK(std::stoll(f[8]) >= 0);
    }
    REQUIRE(exact_vals.size() == 4);
    CHECK(contains(r.err, "slope exact = "));
    CHECK(contains(r.err, "slope approx = "));

    r = run_cli("bench --d 2 --sizes 16 --algo exact");
    CHECK(r.code == 0);
    CHECK(contains(r.err, "slope exact = n/a (need at least two sizes)"));

    CHECK(run_cli("bench --d 2 --sizes 1").code == 2);
    CHECK(run_cli("bench --d 2 --sizes 16 --seeds 0").code == 2);
}
