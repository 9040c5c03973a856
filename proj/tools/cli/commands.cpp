#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cli/output_files.hpp"
#include "cli/report_json.hpp"
#include "cli/svg_plot.hpp"
#include "lislab/chain_oracle.hpp"
#include "lislab/embedding.hpp"
#include "lislab/formula_sweep.hpp"
#include "lislab/op_script.hpp"
#include "lislab/random.hpp"
#include "lislab/reductions.hpp"

namespace lislab::cli {

namespace fs = std::filesystem;
namespace {


struct Common {
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
    cmd->add_option("--out", c.out_dir, "Directory for output files")->capture_default_str();
    cmd->add_flag("--json", c.json, "Also print the JSON report on stdout");
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("size list: \"" + tok + "\" is not an integer");
        }
        if (tok.find_first_not_of(" \t", pos) != std::string::npos || v < 1) {
            throw InvalidInput("size list: \"" + tok + "\" is not a positive integer");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return parse_matrix(in);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    Common common;
    std::string sizes = "1,2,3,4,5,6";
    std::uint64_t seed_count = 10;
    std::string weighted = "2,5,10";
    std::uint64_t fuzz_scripts = 20;
    std::uint64_t fuzz_steps = 1000;
    bool inject_fault = false;
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto sizes = parse_size_list(cfg.sizes);
    std::vector<Weight> weighted;
    for (auto m : parse_size_list(cfg.weighted)) weighted.push_back(static_cast<Weight>(m));

    Json report;
    report["command"] = "verify";
    report["seeds"] = Json{{"first", cfg.common.seed}, {"count", cfg.seed_count}};
    report["inject_fault"] = cfg.inject_fault;
    bool all_ok = true;

    // Structure validation, M in {1, 5}.
    Json structure_failures = Json::array();
    std::size_t structures = 0;
    for (Weight m : {Weight{1}, Weight{5}}) {
        for (std::size_t n : sizes) {
            for (std::uint64_t s = 0; s < cfg.seed_count; ++s) {
                auto inst = make_sweep_instance(n, m, cfg.common.seed + s);
                const auto res = validate_structure(build_embedding(inst.a, inst.b, m));
                ++structures;
                for (const auto& f : res.failures()) {
                    structure_failures.push_back(
                        Json{{"n", n}, {"M", m}, {"seed", cfg.common.seed + s}, {"check", f.name}, {"detail", f.detail}});
                    err << "FAIL structure n=" << n << " M=" << m << " seed=" << cfg.common.seed + s << ": " << f.name
                        << " (" << f.detail << ")\n";
                }
            }
        }
    }
    all_ok = all_ok && structure_failures.empty();
    report["structure"] = Json{{"embeddings", structures}, {"failures", structure_failures}};

    // Formula sweeps; one task per (size, multiplier) cell.
    std::vector<std::future<std::vector<FormulaCheck>>> tasks;
    auto launch = [&](std::size_t n, Weight m) {
        SweepOptions opt;
        opt.sizes = {n};
        opt.multipliers = {m};
        opt.first_seed = cfg.common.seed;
        opt.seed_count = cfg.seed_count;
        opt.perturb_turn_weight = cfg.inject_fault;
        tasks.push_back(std::async(std::launch::async, [opt] { return run_formula_sweep(opt); }));
    };
    for (std::size_t n : sizes) launch(n, 1);
    for (Weight m : weighted) {
        for (std::size_t n : sizes) launch(n, m);
    }
    Json records = Json::array();
    std::size_t formula_failures = 0;
    for (auto& t : tasks) {
        for (const auto& c : t.get()) {
            records.push_back(check_to_json(c));
            if (c.passed) continue;
            ++formula_failures;
            err << "FAIL " << c.kind << " n=" << c.n << " M=" << c.multiplier << " seed=" << c.seed << " i=" << c.i
                << " i'=" << c.i_prime << " j=" << c.j << ": predicted " << c.predicted << ", oracle "
                << (c.oracle ? std::to_string(*c.oracle) : std::string("no chain")) << "\n";
        }
    }
    all_ok = all_ok && formula_failures == 0;
    report["formulas"] = Json{{"checked", records.size()}, {"failed", formula_failures}, {"records", records}};

    // Dynamic structure fuzz.
    Json fuzz_failures = Json::array();
    std::size_t checked_queries = 0;
    for (std::uint64_t s = 0; s < cfg.fuzz_scripts; ++s) {
        ScriptOptions opt;
        opt.steps = cfg.fuzz_steps;
        const auto script = random_script(cfg.common.seed + s, opt);
        DynamicSequence seq;
        const auto res = replay_script(seq, script);
        checked_queries += res.checked_queries;
        for (const auto& m : res.mismatches) {
            fuzz_failures.push_back(Json{{"script_seed", cfg.common.seed + s}, {"detail", m}});
            err << "FAIL fuzz script_seed=" << cfg.common.seed + s << ": " << m << "\n";
        }
    }
    all_ok = all_ok && fuzz_failures.empty();
    report["fuzz"] = Json{{"scripts", cfg.fuzz_scripts}, {"steps", cfg.fuzz_steps}, {"queries_checked", checked_queries},
                          {"failures", fuzz_failures}};
    report["pass"] = all_ok;

    write_file_atomically(fs::path(cfg.common.out_dir) / "verify_report.json", dump_json(report));
    out << "structure: " << structures << " embeddings, " << structure_failures.size() << " failures\n";
    out << "formulas:  " << records.size() << " tuples, " << formula_failures << " failures\n";
    out << "fuzz:      " << checked_queries << " queries, " << fuzz_failures.size() << " failures\n";
    out << (all_ok ? "PASS" : "FAIL") << "\n";
    if (cfg.common.json) out << dump_json(report);
    return all_ok ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// maxplus

struct MaxplusConfig {
    Common common;
    std::string a_path;
    std::string b_path;
    std::size_t random_n = 0;
    Weight bound = 0;
    bool no_oracle = false;
    bool sentinels = false;
};

int cmd_maxplus(const MaxplusConfig& cfg, std::ostream& out) {
    std::optional<Matrix> a;
    std::optional<Matrix> b;
    Weight bound = cfg.bound;
    if (cfg.random_n > 0) {
        if (bound < 1) bound = 1;
        Rng rng(cfg.common.seed);
        a = random_matrix(cfg.random_n, bound, rng);
        b = random_matrix(cfg.random_n, bound, rng);
    } else {
        if (cfg.a_path.empty() || cfg.b_path.empty()) throw InvalidInput("maxplus needs --a and --b, or --random N");
        a = read_matrix_file(cfg.a_path);
        b = read_matrix_file(cfg.b_path);
        if (bound < 1) bound = std::max(a->bound(), b->bound());
    }
    if (a->size() != b->size()) {
        throw InvalidInput("dimension mismatch: A is " + std::to_string(a->size()) + "x" + std::to_string(a->size()) +
                           ", B is " + std::to_string(b->size()) + "x" + std::to_string(b->size()));
    }

    auto run = maxplus_via_lis(*a, *b, bound, cfg.sentinels ? RangeQueryMode::Sentinels : RangeQueryMode::Direct,
                               !cfg.no_oracle);
    run.report.seed = cfg.common.seed;
    const Json report = report_to_json(run.report);
    const fs::path dir(cfg.common.out_dir);
    write_file_atomically(dir / "C.txt", format_matrix(run.product));
    write_file_atomically(dir / "maxplus_report.json", dump_json(report));

    write_matrix(out, run.product);
    if (cfg.common.json) out << dump_json(report);
    return run.report.agree.value_or(true) ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// omv

struct OmvConfig {
    Common common;
    std::string a_path;
    std::string vectors_path;
    std::size_t random_m = 0;
    bool no_oracle = false;
};

int cmd_omv(const OmvConfig& cfg, std::ostream& out) {
    std::optional<Matrix> a;
    std::vector<BitVector> generated;
    std::ifstream vectors_in;
    Rng rng(cfg.common.seed);
    if (cfg.random_m > 0) {
        a = random_matrix(cfg.random_m, 1, rng);
        for (std::size_t k = 0; k < cfg.random_m; ++k) generated.push_back(random_bitvector(cfg.random_m, rng));
    } else {
        if (cfg.a_path.empty() || cfg.vectors_path.empty()) {
            throw InvalidInput("omv needs --a and --vectors, or --random M");
        }
        a = read_matrix_file(cfg.a_path);
        vectors_in.open(cfg.vectors_path);
        if (!vectors_in) throw InvalidInput("cannot open " + cfg.vectors_path);
    }
    if (!a->is_boolean()) throw InvalidInput("omv: matrix must be Boolean (M = 1)");

    OmvSession session(*a);
    const std::size_t m = a->size();
    std::size_t next_generated = 0;
    std::size_t line_no = 0;
    VectorSupplier next = [&]() -> std::optional<BitVector> {
        if (cfg.random_m > 0) {
            if (next_generated >= generated.size()) return std::nullopt;
            return generated[next_generated++];
        }
        std::string line;
        while (std::getline(vectors_in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            BitVector v;
            try {
                v = parse_bitvector(line);
            } catch (const InvalidInput& e) {
                throw InvalidInput(cfg.vectors_path + " line " + std::to_string(line_no) + ": " + e.what());
            }
            if (v.size() != m) {
                throw InvalidInput(cfg.vectors_path + " line " + std::to_string(line_no) + ": vector has length " +
                                   std::to_string(v.size()) + ", expected " + std::to_string(m));
            }
            return v;
        }
        return std::nullopt;
    };

    std::string outputs;
    ResultSink emit = [&](std::size_t, const BitVector& u) {
        const auto line = format_bitvector(u);
        out << line << std::endl;  // flushed before the next vector is read
        outputs += line + "\n";
    };
    auto report = run_omv_online(session, next, emit, cfg.no_oracle ? nullptr : &*a);
    report.seed = cfg.common.seed;
    const Json j = report_to_json(report);
    const fs::path dir(cfg.common.out_dir);
    write_file_atomically(dir / "omv_outputs.txt", outputs);
    write_file_atomically(dir / "omv_report.json", dump_json(j));
    if (cfg.common.json) out << dump_json(j);
    return report.agree.value_or(true) ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// plot

struct PlotConfig {
    Common common;
    std::size_t n = 4;
    Weight bound = 1;
    int chain_j = 1;
    int width = 960;
    int height = 720;
    bool no_labels = false;
    bool force = false;
    std::string output;
    std::string dump_path;
    std::string from_dump;
};

int cmd_plot(const PlotConfig& cfg, std::ostream& out) {
    PointSet points;
    std::string title;
    if (!cfg.from_dump.empty()) {
        std::ifstream in(cfg.from_dump);
        if (!in) throw InvalidInput("cannot open " + cfg.from_dump);
        points = parse_embedding_dump(in);
        title = cfg.from_dump;
    } else {
        if (cfg.n < 1) throw InvalidInput("plot: --n must be at least 1");
        if (cfg.n > 16 && !cfg.force) throw InvalidInput("plot: n > 16 is unreadable; pass --force to render anyway");
        Rng rng(cfg.common.seed);
        const Matrix a = random_matrix(cfg.n, cfg.bound, rng);
        const auto b = random_weights(cfg.n, cfg.bound, rng);
        const Embedding emb = build_embedding(a, b, cfg.bound);
        // Rendering goes through the dump format, the same path --from-dump uses.
        std::istringstream dump(format_embedding_dump(emb));
        points = parse_embedding_dump(dump);
        if (!cfg.dump_path.empty()) write_file_atomically(cfg.dump_path, format_embedding_dump(emb));
        title = "n=" + std::to_string(cfg.n) + " M=" + std::to_string(cfg.bound) + " seed=" +
                std::to_string(cfg.common.seed);
    }

    std::optional<Chain> chain;
    if (cfg.chain_j >= 0) {
        auto find = [&](const PointLabel& l) -> const WeightedPoint* {
            for (const auto& p : points) {
                if (p.label && *p.label == l) return &p;
            }
            return nullptr;
        };
        const auto* start = find(PointLabel::a(cfg.chain_j));
        const auto* end = find(PointLabel::a_prime(cfg.chain_j));
        if (!start || !end) throw InvalidInput("plot: no a/a' pair for --chain " + std::to_string(cfg.chain_j));
        chain = best_chain_between(points, *start, *end);
    }

    SvgOptions opt;
    opt.width = cfg.width;
    opt.height = cfg.height;
    opt.weight_labels = !cfg.no_labels;
    opt.title = title;
    const fs::path path = cfg.output.empty() ? fs::path(cfg.common.out_dir) / "embedding.svg" : fs::path(cfg.output);
    write_file_atomically(path, render_svg(points, chain, opt));
    out << "wrote " << path.string() << " (" << points.size() << " points";
    if (chain) out << ", chain weight " << chain->weight;
    out << ")\n";
    if (cfg.common.json) {
        Json j{{"svg", path.string()}, {"points", points.size()}};
        j["chain_weight"] = chain ? Json(chain->weight) : Json(nullptr);
        out << dump_json(j);
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// bench

struct BenchConfig {
    Common common;
    std::string problem = "maxplus";
    std::string sizes = "2,4,8";
    Weight bound = 3;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

int cmd_bench(const BenchConfig& cfg, std::ostream& out) {
    const auto sizes = parse_size_list(cfg.sizes);
    if (cfg.problem != "maxplus" && cfg.problem != "omv" && cfg.problem != "lis") {
        throw InvalidInput("bench: --problem must be maxplus, omv or lis");
    }
    Json rows = Json::array();
    bool all_agree = true;
    out << std::left << std::setw(8) << "size" << std::setw(12) << "points" << std::setw(12) << "build_ms"
        << std::setw(12) << "update_ms" << std::setw(12) << "query_ms" << "agree\n";
    out << std::fixed << std::setprecision(3);

    for (std::size_t size : sizes) {
        Rng rng(cfg.common.seed);
        Json row;
        row["size"] = size;
        PhaseTimings t;
        std::size_t points = 0;
        bool agree = true;
        if (cfg.problem == "maxplus") {
            const Matrix a = random_matrix(size, cfg.bound, rng);
            const Matrix b = random_matrix(size, cfg.bound, rng);
            const auto run = maxplus_via_lis(a, b, cfg.bound);
            t = run.report.timings;
            points = run.report.points;
            agree = run.report.agree.value_or(false);
            row["counts"] = counts_to_json(run.report.counts);
        } else if (cfg.problem == "omv") {
            const Matrix a = random_matrix(size, 1, rng);
            OmvSession session(a);
            Json per_tile = Json::array();
            for (std::size_t i = 0; i < session.tiling().tiles_per_side(); ++i) {
                for (std::size_t l = 0; l < session.tiling().tiles_per_side(); ++l) {
                    per_tile.push_back(session.tile_points(i, l));
                }
            }
            row["tile_side"] = session.tile_side();
            row["points_per_tile"] = per_tile;
            for (std::size_t k = 0; k < size; ++k) {
                const BitVector v = random_bitvector(size, rng);
                agree = agree && session.apply(v) == boolean_matvec(a, v);
            }
            t = session.timings();
            points = session.total_points();
            row["counts"] = counts_to_json(session.counts());
        } else {
            std::vector<Coord> ys(size);
            std::iota(ys.begin(), ys.end(), Coord{0});
            std::shuffle(ys.begin(), ys.end(), rng);
            DynamicSequence seq;
            std::vector<Handle> handles;
            auto start = Clock::now();
            for (std::size_t k = 0; k < size; ++k) {
                handles.push_back(seq.insert({static_cast<Coord>(k), ys[k], uniform_weight(rng, 0, cfg.bound), {}}));
            }
            t.build_ms = ms_since(start);
            start = Clock::now();
            for (auto h : handles) seq.update_weight(h, uniform_weight(rng, 0, cfg.bound));
            t.update_ms = ms_since(start);
            start = Clock::now();
            Weight last = 0;
            for (std::size_t k = 0; k < size; ++k) last = seq.query_range(0, static_cast<Coord>(k));
            t.query_ms = ms_since(start);
            points = seq.size();
            agree = last == max_weight_chain(seq.snapshot());
            row["counts"] = counts_to_json(counts_of(seq.stats()));
        }
        all_agree = all_agree && agree;
        row["points"] = points;
        row["agree"] = agree;
        row["timings_ms"] = Json{{"build", t.build_ms}, {"update", t.update_ms}, {"query", t.query_ms}};
        rows.push_back(row);
        out << std::setw(8) << size << std::setw(12) << points << std::setw(12) << t.build_ms << std::setw(12)
            << t.update_ms << std::setw(12) << t.query_ms << (agree ? "yes" : "NO") << "\n";
    }

    Json report{{"command", "bench"}, {"problem", cfg.problem}, {"M", cfg.bound}, {"seeds", Json::array({cfg.common.seed})},
                {"rows", rows}};
    write_file_atomically(fs::path(cfg.common.out_dir) / "bench.json", dump_json(report));
    if (cfg.common.json) out << dump_json(report);
    return all_agree ? kSuccess : kCheckFailure;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lislab: matrix embeddings, chain oracles and dynamic LIS reductions"};
    app.require_subcommand(1);

    VerifyConfig verify;
    auto* v = app.add_subcommand("verify", "Formula-vs-oracle sweep, structure checks and dynamic fuzz");
    add_common(v, verify.common);
    v->add_option("--sizes", verify.sizes, "Comma-separated n values")->capture_default_str();
    v->add_option("--seeds", verify.seed_count, "Random instances per n")->capture_default_str();
    v->add_option("--weighted", verify.weighted, "Multipliers for the weighted a->a' form")->capture_default_str();
    v->add_option("--fuzz-scripts", verify.fuzz_scripts, "Random operation scripts")->capture_default_str();
    v->add_option("--fuzz-steps", verify.fuzz_steps, "Operations per script")->capture_default_str();
    v->add_flag("--inject-fault", verify.inject_fault, "Perturb the weight of Lp(0,0) in every embedding");

    MaxplusConfig maxplus;
    auto* mp = app.add_subcommand("maxplus", "(max,+) product through dynamic weighted LIS");
    add_common(mp, maxplus.common);
    mp->add_option("--a", maxplus.a_path, "Matrix file for A");
    mp->add_option("--b", maxplus.b_path, "Matrix file for B");
    mp->add_option("--random", maxplus.random_n, "Generate random n x n inputs instead");
    mp->add_option("--M", maxplus.bound, "Entry bound (default: from the files, 1 for --random)");
    mp->add_flag("--no-oracle", maxplus.no_oracle, "Skip the triple-loop cross-check");
    mp->add_flag("--sentinels", maxplus.sentinels, "Answer range queries with the sentinel construction");

    OmvConfig omv;
    auto* om = app.add_subcommand("omv", "Online Boolean matrix-vector products through unweighted LIS");
    add_common(om, omv.common);
    om->add_option("--a", omv.a_path, "Boolean matrix file");
    om->add_option("--vectors", omv.vectors_path, "One vector per line, read one at a time");
    om->add_option("--random", omv.random_m, "Random m x m matrix and m random vectors");
    om->add_flag("--no-oracle", omv.no_oracle, "Skip the direct product cross-check");

    PlotConfig plot;
    auto* pl = app.add_subcommand("plot", "Render an embedding as SVG");
    add_common(pl, plot.common);
    pl->add_option("--n", plot.n, "Dimension")->capture_default_str();
    pl->add_option("--M", plot.bound, "Entry bound / weight multiplier")->capture_default_str();
    pl->add_option("--chain", plot.chain_j, "Highlight the best a_j -> a'_j chain (-1: none)")->capture_default_str();
    pl->add_option("--width", plot.width)->capture_default_str();
    pl->add_option("--height", plot.height)->capture_default_str();
    pl->add_flag("--no-labels", plot.no_labels, "Omit weight labels");
    pl->add_flag("--force", plot.force, "Allow n > 16");
    pl->add_option("--output", plot.output, "SVG path (default OUT/embedding.svg)");
    pl->add_option("--dump", plot.dump_path, "Also write the embedding dump here");
    pl->add_option("--from-dump", plot.from_dump, "Render an existing dump file");

    BenchConfig bench;
    auto* be = app.add_subcommand("bench", "Wall-clock table for build/update/query phases");
    add_common(be, bench.common);
    be->add_option("--problem", bench.problem, "maxplus | omv | lis")->capture_default_str();
    be->add_option("--sizes", bench.sizes, "Comma-separated sizes (may be empty)")->capture_default_str();
    be->add_option("--M", bench.bound, "Entry bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*v) return cmd_verify(verify, out, err);
        if (*mp) return cmd_maxplus(maxplus, out);
        if (*om) return cmd_omv(omv, out);
        if (*pl) return cmd_plot(plot, out);
        if (*be) return cmd_bench(bench, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ReductionFailure& e) {
        err << "reduction failure: " << e.what() << "\n";
        return kCheckFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("lislab");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lislab::cli
