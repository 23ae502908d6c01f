#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "myxo/actin/automaton.hpp"
#include "myxo/actin/localization.hpp"
#include "myxo/actin/render.hpp"
#include "myxo/errors.hpp"
#include "myxo/geometry/graph_io.hpp"
#include "myxo/geometry/metrics.hpp"
#include "myxo/geometry/proximity.hpp"
#include "myxo/geometry/random_graphs.hpp"
#include "myxo/io/checksum.hpp"
#include "myxo/io/manifest.hpp"
#include "myxo/io/pgm.hpp"
#include "myxo/swarm/network.hpp"
#include "myxo/swarm/snapshot.hpp"
#include "myxo/swarm/world.hpp"
#include "myxo/version.hpp"

namespace myxo::cli {

namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------------------
// shared helpers

fs::path default_out_root() {
    if (const char* env = std::getenv("MYXO_OUT"); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    return fs::current_path();
}

void write_text(const fs::path& path, const std::string& body) {
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for writing");
    f << body;
    if (!f) throw RuntimeError("short write to " + path.string());
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw RuntimeError("bad integer '" + s + "' for " + key);
    }
}

double parse_f64(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw RuntimeError("bad number '" + s + "' for " + key);
    }
}

std::string fmt_f64(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// actin subcommand

struct ActinOptions {
    std::string rule = "c1";
    std::uint64_t n = 500;
    std::uint64_t steps = 1000;
    std::uint64_t seed = 0;
    double p_excited = 0.25;
    double p_refractory = 0.25;
    std::string boundary = "fixed";
    std::string chain = "both";
    bool two_tone = false;
    std::uint64_t detect_window = 256;

    std::map<std::string, std::string> to_config() const {
        return {
            {"rule", rule},
            {"n", std::to_string(n)},
            {"steps", std::to_string(steps)},
            {"seed", std::to_string(seed)},
            {"p_excited", fmt_f64(p_excited)},
            {"p_refractory", fmt_f64(p_refractory)},
            {"boundary", boundary},
            {"chain", chain},
            {"two_tone", two_tone ? "true" : "false"},
            {"detect_window", std::to_string(detect_window)},
        };
    }
    static ActinOptions from_config(const io::RunManifest& m) {
        ActinOptions o;
        o.rule = m.config_at("rule");
        o.n = parse_u64(m.config_at("n"), "n");
        o.steps = parse_u64(m.config_at("steps"), "steps");
        o.seed = parse_u64(m.config_at("seed"), "seed");
        o.p_excited = parse_f64(m.config_at("p_excited"), "p_excited");
        o.p_refractory = parse_f64(m.config_at("p_refractory"), "p_refractory");
        o.boundary = m.config_at("boundary");
        o.chain = m.config_at("chain");
        o.two_tone = m.config_at("two_tone") == "true";
        o.detect_window = parse_u64(m.config_at("detect_window"), "detect_window");
        return o;
    }
};

actin::RuleSpec rule_spec_of(const std::string& rule, const std::string& boundary) {
    actin::RuleSpec spec;
    if (rule == "c1") spec.rule = actin::Rule::C1;
    else if (rule == "c2") spec.rule = actin::Rule::C2;
    else if (rule == "c3") spec.rule = actin::Rule::C3;
    else throw UsageError("unknown rule '" + rule + "' (expected c1, c2 or c3)");
    if (boundary == "fixed") spec.boundary = actin::Boundary::Fixed;
    else if (boundary == "periodic") spec.boundary = actin::Boundary::Periodic;
    else throw UsageError("unknown boundary '" + boundary + "'");
    return spec;
}

nlohmann::json localization_json(const std::vector<actin::LocalizationRecord>& recs,
                                 actin::ChainId chain) {
    auto arr = nlohmann::json::array();
    for (const auto& r : recs) {
        arr.push_back({{"chain", std::string(actin::to_string(chain))},
                       {"kind", std::string(actin::to_string(r.kind))},
                       {"period", r.period},
                       {"displacement", r.displacement},
                       {"first_seen_step", r.first_seen_step},
                       {"position", r.position},
                       {"width", r.width}});
    }
    return arr;
}

io::RunManifest run_actin(const ActinOptions& opt_in, const fs::path& out_dir) {
    Timer timer;
    ActinOptions opt = opt_in;
    if (opt.chain != "x" && opt.chain != "y" && opt.chain != "both") {
        throw UsageError("unknown chain '" + opt.chain + "' (expected x, y or both)");
    }
    const auto spec = rule_spec_of(opt.rule, opt.boundary);
    // the detector needs 2*window rows; clamp and record the effective value
    if (2 * opt.detect_window > opt.steps + 1) opt.detect_window = (opt.steps + 1) / 2;

    fs::create_directories(out_dir);
    const auto initial = actin::random_init(opt.n, opt.p_excited, opt.p_refractory, opt.seed);
    const auto result = actin::run(initial, spec, opt.steps);

    std::vector<std::string> outputs;
    const bool want_x = opt.chain != "y";
    const bool want_y = opt.chain != "x";
    if (want_x) {
        io::write_pgm(out_dir / "x.pgm", actin::diagram_to_image(result.diagram_x, opt.two_tone));
        outputs.push_back("x.pgm");
    }
    if (want_y) {
        io::write_pgm(out_dir / "y.pgm", actin::diagram_to_image(result.diagram_y, opt.two_tone));
        outputs.push_back("y.pgm");
    }
    write_text(out_dir / "activity.csv",
               actin::activity_to_csv(result.activity_x, result.activity_y));
    outputs.push_back("activity.csv");

    if (opt.detect_window > 0) {
        actin::DetectorOptions dopt;
        dopt.window = opt.detect_window;
        auto records = nlohmann::json::array();
        if (want_x) {
            for (auto& rec : localization_json(
                     actin::detect_localizations(result.diagram_x, dopt), actin::ChainId::X)) {
                records.push_back(rec);
            }
        }
        if (want_y) {
            for (auto& rec : localization_json(
                     actin::detect_localizations(result.diagram_y, dopt), actin::ChainId::Y)) {
                records.push_back(rec);
            }
        }
        nlohmann::json doc{{"window", opt.detect_window}, {"records", std::move(records)}};
        write_text(out_dir / "localizations.json", doc.dump(2) + "\n");
        outputs.push_back("localizations.json");
    }

    io::RunManifest manifest;
    manifest.artifact_version = kVersion;
    manifest.subcommand = "actin";
    manifest.seed = opt.seed;
    manifest.config = opt.to_config();
    manifest.outputs = io::record_files(out_dir, outputs);
    manifest.duration_seconds = timer.seconds();
    write_manifest(out_dir / "manifest.json", manifest);
    return manifest;
}

// ---------------------------------------------------------------------------
// graph subcommand

struct GraphOptions {
    std::string family = "gabriel";
    std::string points_path; // empty for er/ws
    std::string format = "json";
    std::uint64_t n = 0; // er/ws node count
    double p = 0.1;
    std::uint64_t k = 4;
    double beta = 0.0;
    std::uint64_t seed = 0;

    std::map<std::string, std::string> to_config() const {
        return {
            {"family", family},
            {"points", points_path},
            {"format", format},
            {"n", std::to_string(n)},
            {"p", fmt_f64(p)},
            {"k", std::to_string(k)},
            {"beta", fmt_f64(beta)},
            {"seed", std::to_string(seed)},
        };
    }
    static GraphOptions from_config(const io::RunManifest& m) {
        GraphOptions o;
        o.family = m.config_at("family");
        o.points_path = m.config_at("points");
        o.format = m.config_at("format");
        o.n = parse_u64(m.config_at("n"), "n");
        o.p = parse_f64(m.config_at("p"), "p");
        o.k = parse_u64(m.config_at("k"), "k");
        o.beta = parse_f64(m.config_at("beta"), "beta");
        o.seed = parse_u64(m.config_at("seed"), "seed");
        return o;
    }
};

io::RunManifest run_graph(const GraphOptions& opt, const fs::path& out_dir) {
    Timer timer;
    const bool needs_points = opt.family == "gabriel" || opt.family == "rng" ||
                              opt.family == "mst" || opt.family == "delaunay" ||
                              opt.family == "hierarchy";
    const bool is_random = opt.family == "er" || opt.family == "ws";
    if (!needs_points && !is_random) {
        throw UsageError("unknown family '" + opt.family + "'");
    }
    if (needs_points && opt.points_path.empty()) {
        throw UsageError("--points is required for family " + opt.family);
    }

    fs::create_directories(out_dir);
    std::vector<std::string> outputs;
    std::vector<io::FileRecord> inputs;

    geom::PointSet points;
    if (needs_points) {
        points = geom::load_points(opt.points_path);
        inputs = {{opt.points_path, io::sha256_file(opt.points_path),
                   static_cast<std::uint64_t>(fs::file_size(opt.points_path))}};
    }

    auto emit = [&](const geom::ProximityGraph& g, const std::string& name,
                    const geom::PointSet* ps) {
        const std::string file = name + "." + opt.format;
        geom::write_graph(out_dir / file, g, opt.format, ps);
        outputs.push_back(file);
    };

    if (opt.family == "gabriel") {
        emit(geom::gabriel(points), "gabriel", &points);
    } else if (opt.family == "rng") {
        emit(geom::relative_neighborhood(points), "rng", &points);
    } else if (opt.family == "mst") {
        emit(geom::mst(points), "mst", &points);
    } else if (opt.family == "delaunay") {
        emit(geom::delaunay(points), "delaunay", &points);
    } else if (opt.family == "hierarchy") {
        const auto h = geom::hierarchy(points);
        emit(h.mst_graph, "mst", &points);
        emit(h.rng_graph, "rng", &points);
        emit(h.gabriel_graph, "gabriel", &points);
        emit(h.delaunay_graph, "delaunay", &points);
        nlohmann::json report;
        report["containment_ok"] = h.ok();
        auto viols = nlohmann::json::array();
        for (const auto& v : h.violations) {
            auto edges = nlohmann::json::array();
            for (const auto& e : v.offending) edges.push_back({e.a, e.b});
            viols.push_back({{"relation", v.relation}, {"edges", std::move(edges)}});
        }
        report["violations"] = std::move(viols);
        write_text(out_dir / "hierarchy_report.json", report.dump(2) + "\n");
        outputs.push_back("hierarchy_report.json");
        if (!h.ok()) {
            std::cerr << "hierarchy containment violated; see hierarchy_report.json\n";
        }
    } else if (opt.family == "er") {
        if (opt.n == 0) throw UsageError("--n is required for family er");
        emit(geom::er_random(static_cast<std::uint32_t>(opt.n), opt.p, opt.seed), "er",
             nullptr);
    } else { // ws
        if (opt.n == 0) throw UsageError("--n is required for family ws");
        emit(geom::watts_strogatz(static_cast<std::uint32_t>(opt.n),
                                  static_cast<std::uint32_t>(opt.k), opt.beta, opt.seed),
             "ws", nullptr);
    }

    io::RunManifest manifest;
    manifest.artifact_version = kVersion;
    manifest.subcommand = "graph";
    manifest.seed = opt.seed;
    manifest.config = opt.to_config();
    manifest.inputs = std::move(inputs);
    manifest.outputs = io::record_files(out_dir, outputs);
    manifest.duration_seconds = timer.seconds();
    write_manifest(out_dir / "manifest.json", manifest);
    return manifest;
}

// ---------------------------------------------------------------------------
// swarm subcommand

struct SwarmOptions {
    std::string config_text; // canonical key=value document
    std::uint64_t seed = 0;
    std::uint64_t steps = 1000;
    std::uint64_t snapshot_every = 0; // 0: only the final snapshot

    std::map<std::string, std::string> to_config() const {
        return {
            {"config_text", config_text},
            {"seed", std::to_string(seed)},
            {"steps", std::to_string(steps)},
            {"snapshot_every", std::to_string(snapshot_every)},
        };
    }
    static SwarmOptions from_config(const io::RunManifest& m) {
        SwarmOptions o;
        o.config_text = m.config_at("config_text");
        o.seed = parse_u64(m.config_at("seed"), "seed");
        o.steps = parse_u64(m.config_at("steps"), "steps");
        o.snapshot_every = parse_u64(m.config_at("snapshot_every"), "snapshot_every");
        return o;
    }
};

io::RunManifest run_swarm(const SwarmOptions& opt, const fs::path& out_dir) {
    Timer timer;
    const auto cfg = swarm::SwarmConfig::from_string(opt.config_text);
    fs::create_directories(out_dir);

    swarm::SwarmWorld world(cfg, opt.seed);
    std::vector<std::string> outputs;
    std::string metrics = swarm::metrics_header();

    auto snapshot = [&](std::uint64_t index) {
        char name[64];
        std::snprintf(name, sizeof name, "agents_%06llu.pgm",
                      static_cast<unsigned long long>(index));
        io::write_pgm(out_dir / name, swarm::render_agents(world));
        outputs.emplace_back(name);
        std::snprintf(name, sizeof name, "field_%06llu.pgm",
                      static_cast<unsigned long long>(index));
        io::write_pgm(out_dir / name, swarm::render_field(world));
        outputs.emplace_back(name);
        metrics += swarm::metrics_row(world);
    };

    if (opt.snapshot_every > 0) snapshot(0);
    for (std::uint64_t s = 1; s <= opt.steps; ++s) {
        world.step();
        if (opt.snapshot_every > 0 && s % opt.snapshot_every == 0) snapshot(s);
    }
    if (opt.snapshot_every == 0 || opt.steps % opt.snapshot_every != 0) {
        snapshot(opt.steps);
    }

    write_text(out_dir / "metrics.csv", metrics);
    outputs.push_back("metrics.csv");

    const auto network = swarm::extract_network(world, cfg.network_threshold);
    nlohmann::json netdoc;
    netdoc["component_count"] = network.component_count;
    netdoc["node_component"] = network.node_component;
    netdoc["suppressed"] = [&] {
        auto arr = nlohmann::json::array();
        for (const auto& nd : world.nodes()) arr.push_back(nd.suppressed);
        return arr;
    }();
    netdoc["graph"] = nlohmann::json::parse(geom::to_json(network.graph));
    write_text(out_dir / "network.json", netdoc.dump(2) + "\n");
    outputs.push_back("network.json");

    io::RunManifest manifest;
    manifest.artifact_version = kVersion;
    manifest.subcommand = "swarm";
    manifest.seed = opt.seed;
    manifest.config = opt.to_config();
    manifest.outputs = io::record_files(out_dir, outputs);
    manifest.duration_seconds = timer.seconds();
    write_manifest(out_dir / "manifest.json", manifest);
    return manifest;
}

// ---------------------------------------------------------------------------
// replay subcommand

int replay(const fs::path& manifest_path, fs::path out_dir, std::ostream& log) {
    const auto manifest = io::read_manifest(manifest_path);
    if (manifest.artifact_version != kVersion) {
        throw RuntimeError("manifest was written by artifact version " +
                           manifest.artifact_version + ", this binary is " + kVersion +
                           "; refusing to replay");
    }
    for (const auto& input : manifest.inputs) {
        if (!fs::exists(input.path)) {
            throw RuntimeError("recorded input " + input.path + " is missing");
        }
        if (io::sha256_file(input.path) != input.sha256) {
            throw RuntimeError("recorded input " + input.path +
                               " no longer matches its checksum");
        }
    }

    if (out_dir.empty()) {
        auto base = fs::absolute(manifest_path).parent_path();
        out_dir = base.parent_path() / (base.filename().string() + "_replay");
    }

    io::RunManifest fresh;
    if (manifest.subcommand == "actin") {
        fresh = run_actin(ActinOptions::from_config(manifest), out_dir);
    } else if (manifest.subcommand == "graph") {
        fresh = run_graph(GraphOptions::from_config(manifest), out_dir);
    } else if (manifest.subcommand == "swarm") {
        fresh = run_swarm(SwarmOptions::from_config(manifest), out_dir);
    } else {
        throw RuntimeError("manifest subcommand '" + manifest.subcommand + "' is unknown");
    }

    std::map<std::string, std::string> fresh_sums;
    for (const auto& rec : fresh.outputs) fresh_sums[rec.path] = rec.sha256;

    int mismatches = 0;
    for (const auto& rec : manifest.outputs) {
        auto it = fresh_sums.find(rec.path);
        if (it == fresh_sums.end()) {
            log << "missing  " << rec.path << "\n";
            ++mismatches;
        } else if (it->second != rec.sha256) {
            log << "mismatch " << rec.path << "\n";
            ++mismatches;
        } else {
            log << "ok       " << rec.path << "\n";
        }
    }
    if (mismatches > 0) {
        log << mismatches << " file(s) differ from the recorded checksums\n";
        return 2;
    }
    log << "replay reproduced " << manifest.outputs.size() << " file(s) byte-identically\n";
    return 0;
}

// ---------------------------------------------------------------------------
// seed fan-out

template <typename Options, typename Runner>
int fan_out(const Options& base, const fs::path& out_dir, std::uint64_t seed_count,
            std::uint64_t jobs, Runner runner) {
    if (seed_count <= 1) {
        runner(base, out_dir);
        return 0;
    }
    std::vector<std::uint64_t> seeds(seed_count);
    for (std::uint64_t i = 0; i < seed_count; ++i) seeds[i] = base.seed + i;

    std::mutex error_mutex;
    std::vector<std::string> errors;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            Options opt = base;
            opt.seed = seeds[i];
            try {
                runner(opt, out_dir / ("seed_" + std::to_string(opt.seed)));
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                errors.emplace_back(e.what());
            }
        }
    };
    const std::uint64_t threads = std::max<std::uint64_t>(1, std::min(jobs, seed_count));
    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "error: " << e << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"myxo: slime-mould computation workbench (actin chain automaton, "
                 "nuclei proximity graphs, virtual plasmodium swarm)"};
    app.name("myxo");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // ---- actin
    auto* actin_cmd = app.add_subcommand(
        "actin", "Two-chain excitable automaton: space-time PGM, activity CSV, "
                 "localization report");
    ActinOptions aopt;
    std::string out_path;
    std::uint64_t seed_count = 1, jobs = 1;
    actin_cmd->add_option("--rule", aopt.rule, "excitation rule: c1, c2 or c3")
        ->check(CLI::IsMember({"c1", "c2", "c3"}));
    actin_cmd->add_option("--n", aopt.n, "nodes per chain")->check(CLI::PositiveNumber);
    actin_cmd->add_option("--steps", aopt.steps, "steps to run")->check(CLI::PositiveNumber);
    actin_cmd->add_option("--seed", aopt.seed, "random seed");
    actin_cmd->add_option("--p-excited", aopt.p_excited, "initial excitation probability");
    actin_cmd->add_option("--p-refractory", aopt.p_refractory,
                          "initial refractory probability");
    actin_cmd->add_option("--boundary", aopt.boundary, "fixed or periodic")
        ->check(CLI::IsMember({"fixed", "periodic"}));
    actin_cmd->add_option("--chain", aopt.chain, "which chain diagrams to write")
        ->check(CLI::IsMember({"x", "y", "both"}));
    actin_cmd->add_flag("--two-tone", aopt.two_tone,
                        "render refractory as white (C1-style rendering)");
    actin_cmd->add_option("--detect-window", aopt.detect_window,
                          "localization search window in rows (0 disables)");
    actin_cmd->add_option("--out", out_path, "output directory");
    actin_cmd->add_option("--seed-count", seed_count, "run this many consecutive seeds");
    actin_cmd->add_option("--jobs", jobs, "parallel workers for --seed-count");

    // ---- graph
    auto* graph_cmd = app.add_subcommand(
        "graph", "Proximity graphs over nuclei point sets, plus ER / Watts-Strogatz "
                 "reference topologies");
    GraphOptions gopt;
    std::string gout;
    graph_cmd
        ->add_option("--family", gopt.family,
                     "gabriel, rng, mst, delaunay, hierarchy, er or ws")
        ->check(CLI::IsMember({"gabriel", "rng", "mst", "delaunay", "hierarchy", "er", "ws"}));
    graph_cmd->add_option("--points", gopt.points_path, "input CSV (header id,x,y)");
    graph_cmd->add_option("--format", gopt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    graph_cmd->add_option("--n", gopt.n, "node count (er/ws)");
    graph_cmd->add_option("--p", gopt.p, "edge probability (er)");
    graph_cmd->add_option("--k", gopt.k, "ring degree (ws, even)");
    graph_cmd->add_option("--beta", gopt.beta, "rewiring probability (ws)");
    graph_cmd->add_option("--seed", gopt.seed, "random seed (er/ws)");
    graph_cmd->add_option("--out", gout, "output directory");

    // ---- swarm
    auto* swarm_cmd = app.add_subcommand(
        "swarm", "Multi-agent virtual plasmodium on a chemoattractant lattice");
    SwarmOptions sopt;
    std::string swarm_config_path, sout;
    std::uint64_t s_seed_count = 1, s_jobs = 1;
    swarm_cmd->add_option("--config", swarm_config_path, "run configuration file")
        ->required();
    swarm_cmd->add_option("--seed", sopt.seed, "random seed");
    swarm_cmd->add_option("--steps", sopt.steps, "steps to run")->check(CLI::PositiveNumber);
    swarm_cmd->add_option("--snapshot-every", sopt.snapshot_every,
                          "frame interval in steps (0: final frame only)");
    swarm_cmd->add_option("--out", sout, "output directory");
    swarm_cmd->add_option("--seed-count", s_seed_count, "run this many consecutive seeds");
    swarm_cmd->add_option("--jobs", s_jobs, "parallel workers for --seed-count");

    // ---- replay
    auto* replay_cmd = app.add_subcommand("replay", "re-execute a recorded manifest and "
                                                    "verify byte-identical outputs");
    std::string manifest_path, rout;
    replay_cmd->add_option("manifest", manifest_path, "path to manifest.json")->required();
    replay_cmd->add_option("--out", rout, "directory for the replayed outputs");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 1;
    }

    try {
        if (*actin_cmd) {
            const fs::path out = out_path.empty()
                                     ? default_out_root() / ("actin_seed" + std::to_string(aopt.seed))
                                     : fs::path(out_path);
            return fan_out(aopt, out, seed_count, jobs,
                           [](const ActinOptions& o, const fs::path& d) { run_actin(o, d); });
        }
        if (*graph_cmd) {
            const fs::path out = gout.empty()
                                     ? default_out_root() / ("graph_" + gopt.family)
                                     : fs::path(gout);
            run_graph(gopt, out);
            return 0;
        }
        if (*swarm_cmd) {
            sopt.config_text = swarm::SwarmConfig::from_file(swarm_config_path).to_string();
            const fs::path out = sout.empty()
                                     ? default_out_root() / ("swarm_seed" + std::to_string(sopt.seed))
                                     : fs::path(sout);
            return fan_out(sopt, out, s_seed_count, s_jobs,
                           [](const SwarmOptions& o, const fs::path& d) { run_swarm(o, d); });
        }
        if (*replay_cmd) {
            return replay(manifest_path, rout.empty() ? fs::path() : fs::path(rout),
                          std::cout);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace myxo::cli
