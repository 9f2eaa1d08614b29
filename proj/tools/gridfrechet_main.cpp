#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridfrechet/approx.hpp"
#include "gridfrechet/bench.hpp"
#include "gridfrechet/errors.hpp"
#include "gridfrechet/exact.hpp"
#include "gridfrechet/generators.hpp"
#include "gridfrechet/walk_io.hpp"

namespace gf = gridfrechet;

namespace {

gf::Metric to_metric(const std::string& s) {
    return s == "linf" ? gf::Metric::LINF : gf::Metric::L1;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        const std::string tok = text.substr(i, j - i);
        if (!tok.empty()) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw gf::input_error(std::string(what) + ": '" + tok +
                                      "' is not a valid integer");
            }
        } else if (!text.empty()) {
            throw gf::input_error(std::string(what) + ": empty entry in list");
        }
        i = j + 1;
    }
    return out;
}

void print_gen_summary(const gf::GridWalk& w) {
    std::cout << "n=" << w.size() << '\n';
    std::cout << "lambda=" << gf::multiplicity(w) << '\n';
    std::cout << "bbox=";
    for (std::size_t axis = 0; axis < w.dimension(); ++axis) {
        std::int64_t lo = w.vertices[0].coords[axis];
        std::int64_t hi = lo;
        for (const gf::GridPoint& p : w.vertices) {
            lo = std::min(lo, p.coords[axis]);
            hi = std::max(hi, p.coords[axis]);
        }
        if (axis) std::cout << 'x';
        std::cout << '[' << lo << ',' << hi << ']';
    }
    std::cout << '\n';
}

struct DistArgs {
    std::string algo;
    std::string eps;
    std::string metric = "l1";
    std::string path_p, path_q;
};

struct DecideArgs {
    std::int64_t delta = 0;
    std::string eps;
    std::string metric = "l1";
    std::string force_method;
    std::string path_p, path_q;
};

void cmd_dist(const DistArgs& a) {
    const gf::GridWalk P = gf::read_walk_file(a.path_p);
    const gf::GridWalk Q = gf::read_walk_file(a.path_q);
    const gf::Metric metric = to_metric(a.metric);
    if (a.algo == "exact") {
        std::cout << gf::exact_distance(P, Q, metric) << '\n';
        return;
    }
    if (a.eps.empty())
        throw gf::input_error("--eps is required for --algo " + a.algo);
    const gf::Rational eps = gf::Rational::parse(a.eps);
    if (a.algo == "approx") {
        const gf::ApproxResult r = gf::approx_distance(P, Q, eps, metric);
        const gf::Rational lower = gf::Rational(r.value) / (gf::Rational(1) + eps);
        std::cout << r.value << '\n';
        std::cout << "interval [" << lower.str() << ", " << r.value << "]\n";
    } else {
        std::cout << gf::continuous_distance(P, Q, eps, metric).str() << '\n';
    }
}

void cmd_decide(const DecideArgs& a) {
    const gf::GridWalk P = gf::read_walk_file(a.path_p);
    const gf::GridWalk Q = gf::read_walk_file(a.path_q);
    std::optional<gf::DeciderMethod> forced;
    if (a.force_method == "dp") forced = gf::DeciderMethod::SimplifiedDP;
    if (a.force_method == "cells") forced = gf::DeciderMethod::SwitchingCells;
    const gf::DeciderVerdict v = gf::approx_decide(P, Q, a.delta, gf::Rational::parse(a.eps),
                                                   to_metric(a.metric), forced);
    std::cout << (v == gf::DeciderVerdict::LE ? "LE" : "GT") << '\n';
}

struct BenchArgs {
    std::size_t d = 3;
    std::string eps = "1/2";
    std::int64_t lambda = 1;
    std::string sizes;
    std::size_t seeds = 1;
    std::string algo = "both";
    std::string metric = "l1";
};

void cmd_bench(const BenchArgs& a) {
    const gf::Rational eps = gf::Rational::parse(a.eps);
    const gf::Metric metric = to_metric(a.metric);
    std::vector<std::size_t> sizes;
    for (std::int64_t v : parse_int_list(a.sizes, "--sizes")) {
        if (v < 2) throw gf::input_error("--sizes entries must be >= 2");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw gf::input_error("--sizes must list at least one size");
    if (a.seeds < 1) throw gf::input_error("--seeds must be >= 1");
    const bool run_exact = a.algo == "exact" || a.algo == "both";
    const bool run_approx = a.algo == "approx" || a.algo == "both";

    std::cout << gf::kBenchCsvHeader << '\n';
    std::map<std::string, std::map<std::size_t, std::vector<std::int64_t>>> times;
    for (const std::size_t n : sizes) {
        for (std::size_t s = 0; s < a.seeds; ++s) {
            const std::uint64_t sp = s * 0x9E3779B97F4A7C15ULL + n;
            const gf::GridWalk P = gf::random_lambda_walk(a.d, n, a.lambda, sp);
            const gf::GridWalk Q =
                gf::random_lambda_walk(a.d, n, a.lambda, sp ^ 0xD1B54A32D192ED03ULL);
            auto emit = [&](const std::string& algo, std::int64_t value, std::int64_t calls,
                            std::int64_t ns) {
                gf::BenchRecord rec;
                rec.d = a.d;
                rec.n = P.size();
                rec.m = Q.size();
                rec.lambda = a.lambda;
                rec.eps = a.eps;
                rec.algo = algo;
                rec.value = value;
                rec.decider_calls = calls;
                rec.wall_time_ns = ns;
                rec.seed = s;
                std::cout << gf::to_csv(rec) << '\n';
                times[algo][n].push_back(ns);
            };
            using clock = std::chrono::steady_clock;
            if (run_exact) {
                const auto t0 = clock::now();
                const std::int64_t v = gf::exact_distance(P, Q, metric);
                const auto ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0)
                        .count();
                emit("exact", v, 0, ns);
            }
            if (run_approx) {
                const auto t0 = clock::now();
                const gf::ApproxResult r = gf::approx_distance(P, Q, eps, metric);
                const auto ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0)
                        .count();
                emit("approx", r.value, r.decider_calls, ns);
            }
        }
    }

    for (const char* algo : {"exact", "approx"}) {
        const auto it = times.find(algo);
        if (it == times.end()) continue;
        std::vector<std::pair<double, double>> pts;
        for (const auto& [n, samples] : it->second)
            pts.emplace_back(static_cast<double>(n),
                             static_cast<double>(gf::median_ns(samples)));
        if (pts.size() < 2) {
            std::fprintf(stderr, "slope %s = n/a (need at least two sizes)\n", algo);
        } else {
            std::fprintf(stderr, "slope %s = %.3f\n", algo, gf::fit_log2_slope(pts));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and approximate Frechet distances between grid-graph walks"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* cdist = app.add_subcommand("dist", "Distance between two walk files");
    cdist->add_option("--algo", dist.algo, "exact | approx | continuous")
        ->required()
        ->check(CLI::IsMember({"exact", "approx", "continuous"}));
    cdist->add_option("--eps", dist.eps, "approximation factor, rational p/q or decimal");
    cdist->add_option("--metric", dist.metric)->check(CLI::IsMember({"l1", "linf"}));
    cdist->add_option("path_p", dist.path_p)->required();
    cdist->add_option("path_q", dist.path_q)->required();
    cdist->callback([&] { cmd_dist(dist); });

    DecideArgs dec;
    auto* cdec = app.add_subcommand("decide", "Approximate decision d <= delta");
    cdec->add_option("--delta", dec.delta)->required();
    cdec->add_option("--eps", dec.eps)->required();
    cdec->add_option("--metric", dec.metric)->check(CLI::IsMember({"l1", "linf"}));
    cdec->add_option("--force-method", dec.force_method)
        ->check(CLI::IsMember({"dp", "cells"}));
    cdec->add_option("path_p", dec.path_p)->required();
    cdec->add_option("path_q", dec.path_q)->required();
    cdec->callback([&] { cmd_decide(dec); });

    auto* cgen = app.add_subcommand("gen", "Generate walk files");
    cgen->require_subcommand(1);

    struct {
        std::size_t d = 2;
        std::int64_t a = 1, w = 1, lambda = 1;
        bool negative = false;
        std::string out;
    } band;
    auto* cband = cgen->add_subcommand("band", "Diagonal-band cover walk");
    cband->add_option("--d", band.d)->required();
    cband->add_option("--a", band.a)->required();
    cband->add_option("--w", band.w)->required();
    cband->add_option("--lambda", band.lambda);
    cband->add_flag("--negative", band.negative);
    cband->add_option("-o,--out", band.out)->required();
    cband->callback([&] {
        gf::BandSpec spec;
        spec.dimension = band.d;
        spec.a = band.a;
        spec.w = band.w;
        spec.lambda = band.lambda;
        spec.sign = band.negative ? gf::BandSign::Negative : gf::BandSign::Positive;
        const gf::GridWalk w = gf::band_path(spec);
        gf::write_walk_file(band.out, w);
        print_gen_summary(w);
    });

    struct {
        std::size_t d = 2, n = 2;
        std::int64_t lambda = 1;
        std::uint64_t seed = 0;
        std::string out;
    } rnd;
    auto* crnd = cgen->add_subcommand("random", "Random multiplicity-bounded walk");
    crnd->add_option("--d", rnd.d)->required();
    crnd->add_option("--n", rnd.n)->required();
    crnd->add_option("--lambda", rnd.lambda);
    crnd->add_option("--seed", rnd.seed);
    crnd->add_option("-o,--out", rnd.out)->required();
    crnd->callback([&] {
        const gf::GridWalk w = gf::random_lambda_walk(rnd.d, rnd.n, rnd.lambda, rnd.seed);
        gf::write_walk_file(rnd.out, w);
        print_gen_summary(w);
    });

    struct {
        std::string origin, signal, cuts, out;
    } emb;
    auto* cemb = cgen->add_subcommand("embed", "Product embedding of two walks");
    cemb->add_option("--origin", emb.origin)->required();
    cemb->add_option("--signal", emb.signal)->required();
    cemb->add_option("--cuts", emb.cuts, "comma list, one entry per origin edge");
    cemb->add_option("-o,--out", emb.out)->required();
    cemb->callback([&] {
        const gf::GridWalk origin = gf::read_walk_file(emb.origin);
        const gf::GridWalk signal = gf::read_walk_file(emb.signal);
        std::vector<std::size_t> cuts;
        for (std::int64_t v : parse_int_list(emb.cuts, "--cuts")) {
            if (v < 0) throw gf::input_error("--cuts entries must be >= 0");
            cuts.push_back(static_cast<std::size_t>(v));
        }
        const gf::GridWalk w = gf::embed_product(origin, signal, cuts);
        gf::write_walk_file(emb.out, w);
        print_gen_summary(w);
    });

    struct {
        std::string values;
        std::int64_t C = 1;
        std::string out;
    } sc;
    auto* csc = cgen->add_subcommand("scale1d", "Scaled 1-d walk through given values");
    csc->add_option("--values", sc.values)->required();
    csc->add_option("--C", sc.C)->required();
    csc->add_option("-o,--out", sc.out)->required();
    csc->callback([&] {
        const gf::GridWalk w = gf::scale_discretize_1d(parse_int_list(sc.values, "--values"), sc.C);
        gf::write_walk_file(sc.out, w);
        print_gen_summary(w);
    });

    struct {
        std::size_t d = 3;
        std::int64_t lambda = 1;
        std::string eps;
        std::int64_t N = 1;
    } val;
    auto* cval = app.add_subcommand("validate", "Lower-bound construction parameters");
    cval->add_option("--d", val.d)->required();
    cval->add_option("--lambda", val.lambda)->required();
    cval->add_option("--eps", val.eps)->required();
    cval->add_option("--N", val.N)->required();
    cval->callback([&] {
        const gf::HardnessParams hp =
            gf::hardness_params(val.d, val.lambda, gf::Rational::parse(val.eps), val.N);
        std::cout << "a=" << hp.a << '\n';
        std::cout << "w=" << hp.w << '\n';
        std::cout << "feasible=" << (hp.feasible ? "true" : "false") << '\n';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", hp.threshold);
        std::cout << "threshold=" << buf << '\n';
    });

    BenchArgs bench;
    auto* cbench = app.add_subcommand("bench", "Scaling benchmark, CSV to stdout");
    cbench->add_option("--d", bench.d);
    cbench->add_option("--eps", bench.eps);
    cbench->add_option("--lambda", bench.lambda);
    cbench->add_option("--sizes", bench.sizes)->required();
    cbench->add_option("--seeds", bench.seeds);
    cbench->add_option("--algo", bench.algo)->check(CLI::IsMember({"exact", "approx", "both"}));
    cbench->add_option("--metric", bench.metric)->check(CLI::IsMember({"l1", "linf"}));
    cbench->callback([&] { cmd_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const gf::dimension_mismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const gf::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
