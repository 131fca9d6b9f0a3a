// corekit — distributed k-core decomposition toolkit.
//
// Subcommands: decompose, simulate, generate, verify, bench.
// Exit codes: 0 success, 2 usage/input error, 3 correctness failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corekit/engine.hpp"
#include "corekit/graph.hpp"
#include "corekit/metrics.hpp"
#include "corekit/rmat.hpp"
#include "corekit/seqcore.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

corekit::Graph load_graph(const std::string& path, const std::string& format,
                          corekit::CleanseStats* stats = nullptr) {
    std::string fmt = format;
    if (fmt.empty()) {
        fmt = fs::path(path).extension() == ".json" ? "json" : "edgelist";
    }
    if (fmt == "json")
        return corekit::parse_adjacency_json(read_file(path), stats);
    if (fmt == "edgelist" || fmt == "csv") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return corekit::data_cleanse(corekit::parse_edge_list(in), stats);
    }
    throw std::runtime_error("unknown input format: " + fmt);
}

struct CommonFlags {
    std::string engine = "event";
    std::uint64_t seed = 0;
    std::size_t bins = 8;
    std::uint64_t heartbeat_ms = 0;
    std::uint64_t watchdog_ms = 0;
    std::string latency = "zero";
    std::string format;  // input format, inferred when empty
};

void add_sim_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--engine", f.engine, "event | threaded")
        ->check(CLI::IsMember({"event", "threaded"}));
    cmd->add_option("--seed", f.seed, "rng seed");
    cmd->add_option("--bins", f.bins, "time slices (default 8)");
    cmd->add_option("--heartbeat-ms", f.heartbeat_ms,
                    "heartbeat period (ms or ticks; 0 = engine default)");
    cmd->add_option("--watchdog-ms", f.watchdog_ms,
                    "watchdog quiet period (ms or ticks; 0 = engine default)");
    cmd->add_option("--latency", f.latency, "zero | fixed:D | uniform:LO:HI");
    cmd->add_option("--format", f.format, "json | edgelist");
}

corekit::SimConfig make_config(const CommonFlags& f) {
    corekit::SimConfig cfg;
    cfg.engine = f.engine == "event" ? corekit::EngineKind::Event
                                     : corekit::EngineKind::Threaded;
    cfg.rng_seed = f.seed;
    cfg.bins = f.bins;
    cfg.heartbeat_period = f.heartbeat_ms;
    cfg.watchdog_quiet_period = f.watchdog_ms;
    cfg.latency = corekit::LatencyModel::parse(f.latency);
    cfg.validate();
    return cfg;
}

json config_json(const corekit::SimConfig& cfg) {
    return json{{"engine", cfg.engine == corekit::EngineKind::Event ? "event" : "threaded"},
                {"heartbeat_period", cfg.effective_heartbeat_period()},
                {"watchdog_quiet_period", cfg.effective_quiet_period()},
                {"bins", cfg.bins},
                {"latency", cfg.latency.to_string()},
                {"rng_seed", cfg.rng_seed}};
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    const json& resolved, std::uint64_t seed,
                    const std::string& started, const std::string& ended) {
    json m{{"command", command}, {"inputs", inputs},   {"outputs", outputs},
           {"resolved", resolved}, {"seed", seed},     {"version", kVersion},
           {"started", started},   {"ended", ended}};
    write_file(dir / "manifest.json", m.dump(2) + "\n");
}

std::string histogram_csv(const std::map<std::uint32_t, std::size_t>& hist) {
    std::ostringstream out;
    out << "core,vertices\n";
    for (const auto& [k, c] : hist) out << k << "," << c << "\n";
    return out.str();
}

int cmd_decompose(const std::string& input, const std::string& format,
                  const fs::path& out_dir, const std::string& command) {
    const auto started = now_iso8601();
    corekit::Graph g = load_graph(input, format);
    corekit::CoreMap cores = corekit::bz_decompose(g);
    write_file(out_dir / "cores.csv", corekit::write_core_table(g, cores));
    write_file(out_dir / "histogram.csv",
               histogram_csv(corekit::core_distribution(cores)));
    auto st = corekit::stats(g);
    std::cout << "n=" << st.n << " m=" << st.m << " avg_degree=" << st.avg_degree
              << " max_degree=" << st.max_degree
              << " max_core=" << cores.max_core() << "\n";
    write_manifest(out_dir, command, {input}, {"cores.csv", "histogram.csv"},
                   json::object(), 0, started, now_iso8601());
    return kExitOk;
}

int cmd_simulate(const std::string& input, const CommonFlags& flags,
                 bool no_verify, const fs::path& out_dir,
                 const std::string& command) {
    const auto started = now_iso8601();
    corekit::Graph g = load_graph(input, flags.format);
    corekit::SimConfig cfg = make_config(flags);
    corekit::SimResult result = corekit::run(g, cfg);
    corekit::MetricsReport report =
        corekit::build_report(fs::path(input).stem().string(), g, result, cfg.bins);

    write_file(out_dir / "report.json",
               corekit::export_report(report, corekit::ReportFormat::Structured));
    write_file(out_dir / "messages_per_bin.csv", corekit::tabular_messages_per_bin(report));
    write_file(out_dir / "active_per_bin.csv", corekit::tabular_active_per_bin(report));
    write_file(out_dir / "totals.csv", corekit::tabular_totals(report));
    write_file(out_dir / "cores.csv", corekit::write_core_table(g, result.final_cores));

    json resolved = config_json(cfg);
    resolved["verify"] = !no_verify;
    write_manifest(out_dir, command, {input},
                   {"report.json", "messages_per_bin.csv", "active_per_bin.csv",
                    "totals.csv", "cores.csv"},
                   resolved, cfg.rng_seed, started, now_iso8601());

    if (!no_verify) {
        corekit::CoreMap oracle = corekit::bz_decompose(g);
        if (oracle.core != result.final_cores.core) {
            std::cerr << "error: simulated cores differ from sequential oracle\n";
            return kExitMismatch;
        }
    }
    std::cout << "total_core_messages=" << report.total_core_messages
              << " bound=" << report.bound_value
              << " max_core=" << report.max_core << " duration="
              << report.duration << report.duration_unit << "\n";
    return kExitOk;
}

int cmd_generate(const std::string& kind, std::uint64_t n,
                 std::uint64_t edge_factor, std::uint64_t seed,
                 const std::string& output, const std::string& command) {
    const auto started = now_iso8601();
    corekit::Graph g;
    if (kind == "rmat") {
        corekit::RmatParams p;
        p.n_target = n;
        p.edge_factor = edge_factor;
        p.seed = seed;
        g = corekit::rmat_generate(p);
    } else if (kind == "cycle") {
        g = corekit::gen_cycle(n);
    } else if (kind == "path") {
        g = corekit::gen_path(n);
    } else if (kind == "complete") {
        g = corekit::gen_complete(n);
    } else {
        throw std::runtime_error("unknown graph kind: " + kind);
    }
    write_file(output, corekit::write_adjacency_json(g));
    auto st = corekit::stats(g);
    std::cout << "n=" << st.n << " m=" << st.m << " avg_degree=" << st.avg_degree
              << " max_degree=" << st.max_degree << "\n";
    const fs::path out(output);
    if (out.has_parent_path())
        write_manifest(out.parent_path(), command, {}, {output},
                       json{{"kind", kind}, {"n", n}, {"edge_factor", edge_factor}},
                       seed, started, now_iso8601());
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& format,
               const std::string& cores_a, const std::string& cores_b) {
    corekit::Graph g = load_graph(input, format);
    auto ta = corekit::parse_core_table(read_file(cores_a));
    auto tb = corekit::parse_core_table(read_file(cores_b));

    bool ok = true;
    for (const auto& [v, c] : ta) {
        auto it = tb.find(v);
        if (it == tb.end()) {
            std::cerr << "vertex " << v << " only in " << cores_a << "\n";
            ok = false;
        } else if (it->second != c) {
            std::cerr << "vertex " << v << ": " << c << " vs " << it->second << "\n";
            ok = false;
        }
    }
    for (const auto& [v, c] : tb)
        if (!ta.count(v)) {
            std::cerr << "vertex " << v << " only in " << cores_b << "\n";
            ok = false;
        }

    for (const auto* table : {&ta, &tb}) {
        corekit::CoreMap cores;
        cores.core.resize(g.n());
        for (corekit::VertexId u = 0; u < g.n(); ++u) {
            auto it = table->find(g.label(u));
            if (it == table->end()) {
                std::cerr << "table missing vertex " << g.label(u) << "\n";
                return kExitMismatch;
            }
            cores.core[u] = it->second;
        }
        std::vector<corekit::LocalityViolation> violations;
        if (!corekit::verify_locality(g, cores, &violations)) {
            for (const auto& v : violations)
                std::cerr << "locality violation at " << g.label(v.vertex)
                          << ": core " << v.core << ", |>=k| " << v.count_ge_k
                          << ", |>=k+1| " << v.count_ge_k1 << "\n";
            ok = false;
        }
    }
    if (!ok) return kExitMismatch;
    std::cout << "core tables agree on " << ta.size() << " vertices\n";
    return kExitOk;
}

int cmd_bench(const std::string& input, const CommonFlags& flags,
              std::size_t runs, const fs::path& out_dir,
              const std::string& command) {
    if (runs < 1) throw CLI::ValidationError("--runs must be >= 1");
    const auto started = now_iso8601();
    corekit::Graph g = load_graph(input, flags.format);
    corekit::CoreMap oracle = corekit::bz_decompose(g);

    std::vector<double> durations;
    std::vector<std::uint64_t> seeds;
    corekit::MetricsReport last;
    std::ostringstream rows;
    rows << "run,seed,total_core_messages,total_heartbeats,duration,duration_unit\n";
    for (std::size_t i = 0; i < runs; ++i) {
        corekit::SimConfig cfg = make_config(flags);
        cfg.rng_seed = flags.seed + i;
        seeds.push_back(cfg.rng_seed);
        corekit::SimResult r = corekit::run(g, cfg);
        if (r.final_cores.core != oracle.core) {
            std::cerr << "error: run " << i << " diverged from oracle\n";
            return kExitMismatch;
        }
        last = corekit::build_report(fs::path(input).stem().string(), g, r, cfg.bins);
        durations.push_back(last.duration);
        rows << i << "," << cfg.rng_seed << "," << last.total_core_messages << ","
             << last.total_heartbeats << "," << last.duration << ","
             << last.duration_unit << "\n";
    }
    auto summary = corekit::summarize_durations(durations);
    last.runs = runs;
    last.duration_mean = summary.mean;
    last.duration_ci95 = summary.ci95;

    write_file(out_dir / "runs.csv", rows.str());
    write_file(out_dir / "summary.json",
               corekit::export_report(last, corekit::ReportFormat::Structured));
    json resolved = config_json(make_config(flags));
    resolved["runs"] = runs;
    resolved["per_run_seeds"] = seeds;
    write_manifest(out_dir, command, {input}, {"runs.csv", "summary.json"},
                   resolved, flags.seed, started, now_iso8601());
    std::cout << "runs=" << runs << " duration_mean=" << summary.mean
              << " duration_ci95=" << summary.ci95 << " ("
              << last.duration_unit << ")\n";
    return kExitOk;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributed k-core decomposition toolkit"};
    app.require_subcommand(1);
    const std::string command = join_args(argc, argv);

    std::string input, output = ".", format;
    CommonFlags flags;
    bool no_verify = false;
    std::size_t runs = 1;
    std::string gen_kind;
    std::uint64_t gen_n = 0, gen_ef = 8, gen_seed = 0;

    auto* decompose = app.add_subcommand("decompose", "sequential oracle decomposition");
    decompose->add_option("input", input)->required();
    decompose->add_option("--out", output, "output directory");
    decompose->add_option("--format", format, "json | edgelist");

    auto* simulate = app.add_subcommand("simulate", "run the message-passing simulation");
    simulate->add_option("input", input)->required();
    simulate->add_option("--out", output, "output directory");
    simulate->add_flag("--no-verify", no_verify, "skip the oracle comparison");
    add_sim_flags(simulate, flags);

    auto* generate = app.add_subcommand("generate", "emit a synthetic graph");
    generate->add_option("kind", gen_kind, "rmat | cycle | path | complete")->required();
    generate->add_option("n", gen_n, "vertex count")->required();
    generate->add_option("edge_factor", gen_ef, "rmat edges per vertex (default 8)");
    generate->add_option("--seed", gen_seed, "rng seed");
    generate->add_option("--out", output, "output file")->required();

    auto* verify = app.add_subcommand("verify", "compare two core tables");
    std::string cores_a, cores_b;
    verify->add_option("input", input)->required();
    verify->add_option("cores_a", cores_a)->required();
    verify->add_option("cores_b", cores_b)->required();
    verify->add_option("--format", format, "json | edgelist");

    auto* bench = app.add_subcommand("bench", "repeated runs with duration statistics");
    bench->add_option("input", input)->required();
    bench->add_option("--out", output, "output directory");
    bench->add_option("--runs", runs, "number of runs")->required();
    add_sim_flags(bench, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (decompose->parsed())
            return cmd_decompose(input, format, output, command);
        if (simulate->parsed())
            return cmd_simulate(input, flags, no_verify, output, command);
        if (generate->parsed())
            return cmd_generate(gen_kind, gen_n, gen_ef, gen_seed, output, command);
        if (verify->parsed())
            return cmd_verify(input, format, cores_a, cores_b);
        if (bench->parsed())
            return cmd_bench(input, flags, runs, output, command);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
