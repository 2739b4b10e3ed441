#include "tcperc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tcperc/dynamics.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/oracles.hpp"
#include "tcperc/render.hpp"
#include "tcperc/rng.hpp"
#include "tcperc/tilde.hpp"
#include "tcperc/verify_suite.hpp"

namespace tcperc {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

FamilySpec parse_family(const json& obj) {
    reject_unknown(obj, "family", {"kind", "n", "d", "dim", "p_initial", "family_seed", "r"});
    FamilySpec spec;
    spec.kind = family_kind_from_name(get_or<std::string>(obj, "kind", "linear-unoriented"));
    spec.n = get_or<int>(obj, "n", 0);
    spec.d = get_or<int>(obj, "d", 0);
    spec.dim = get_or<int>(obj, "dim", 0);
    spec.p_initial = get_or<double>(obj, "p_initial", 0.0);
    spec.family_seed = get_or<uint64_t>(obj, "family_seed", 0);
    spec.r = get_or<int>(obj, "r", 0);
    return spec;
}

OpenParams parse_model(const json& obj) {
    reject_unknown(obj, "model", {"mode", "p_open", "p_left", "p_right"});
    OpenParams params;
    params.mode = open_mode_from_name(get_or<std::string>(obj, "mode", "uniform"));
    params.p_open = get_or<double>(obj, "p_open", 0.0);
    params.p_left = get_or<double>(obj, "p_left", 0.0);
    params.p_right = get_or<double>(obj, "p_right", 0.0);
    return params;
}

DynamicsConfig parse_dynamics(const json& obj) {
    reject_unknown(obj, "dynamics", {"kind", "d"});
    DynamicsConfig dyn;
    std::string kind = get_or<std::string>(obj, "kind", "transitive");
    if (kind == "transitive") dyn.kind = DynamicsKind::kTransitive;
    else if (kind == "kd") dyn.kind = DynamicsKind::kKd;
    else if (kind == "tilde") dyn.kind = DynamicsKind::kTilde;
    else throw ConfigError("unknown dynamics kind: " + kind);
    dyn.d = get_or<int>(obj, "d", 4);
    return dyn;
}

ExperimentConfig parse_experiment(const json& obj) {
    reject_unknown(obj, "experiment",
                   {"trials", "alpha", "n_list", "grid_p_open", "grid_p_left", "grid_p_right",
                    "tolerance", "coupled", "instances", "max_n", "ell_min", "ell_max",
                    "regime_alpha"});
    ExperimentConfig exp;
    exp.trials = get_or<int>(obj, "trials", exp.trials);
    exp.alpha = get_or<double>(obj, "alpha", exp.alpha);
    exp.n_list = get_or<std::vector<int>>(obj, "n_list", exp.n_list);
    exp.grid_p_open = get_or<std::vector<double>>(obj, "grid_p_open", exp.grid_p_open);
    exp.grid_p_left = get_or<std::vector<double>>(obj, "grid_p_left", exp.grid_p_left);
    exp.grid_p_right = get_or<std::vector<double>>(obj, "grid_p_right", exp.grid_p_right);
    exp.tolerance = get_or<double>(obj, "tolerance", exp.tolerance);
    exp.coupled = get_or<bool>(obj, "coupled", exp.coupled);
    exp.instances = get_or<int>(obj, "instances", exp.instances);
    exp.max_n = get_or<int>(obj, "max_n", exp.max_n);
    exp.ell_min = get_or<int>(obj, "ell_min", exp.ell_min);
    exp.ell_max = get_or<int>(obj, "ell_max", exp.ell_max);
    exp.regime_alpha = get_or<double>(obj, "regime_alpha", exp.regime_alpha);
    return exp;
}

OutputConfig parse_output(const json& obj) {
    reject_unknown(obj, "output", {"json", "csv", "ppm", "scale"});
    OutputConfig out;
    out.json = get_or<std::string>(obj, "json", "");
    out.csv = get_or<std::string>(obj, "csv", "");
    out.ppm = get_or<std::string>(obj, "ppm", "");
    out.scale = get_or<int>(obj, "scale", 1);
    return out;
}

// -------------------------------------------------------------- formatting

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw ConfigError("write failed for " + path);
}

void emit_json(const RunConfig& config, const json& summary, std::ostream& diag) {
    std::string text = summary.dump(2);
    text.push_back('\n');
    if (config.output.json.empty()) diag << text;
    else write_text_file(config.output.json, text);
}

constexpr const char* kCsvHeader =
    "family,n,p_left,p_right,seed,trial,saturated,max_right,max_left,rounds\n";

void append_trial_rows(std::string& csv, const FamilySpec& family, int n,
                       const OpenParams& params, const std::vector<TrialOutcome>& outcomes) {
    auto [pl, pr] = display_densities(params);
    for (size_t t = 0; t < outcomes.size(); ++t) {
        const TrialOutcome& o = outcomes[t];
        csv += family_kind_name(family.kind);
        csv += ',';
        csv += std::to_string(n);
        csv += ',';
        csv += fmt_double(pl);
        csv += ',';
        csv += fmt_double(pr);
        csv += ',';
        csv += std::to_string(o.seed);
        csv += ',';
        csv += std::to_string(t);
        csv += ',';
        csv += o.saturated ? '1' : '0';
        csv += ',';
        csv += std::to_string(o.max_right);
        csv += ',';
        csv += std::to_string(o.max_left);
        csv += ',';
        csv += std::to_string(o.rounds);
        csv += '\n';
    }
}

// -------------------------------------------------------------- commands

json family_to_json(const FamilySpec& spec) {
    return json{{"kind", family_kind_name(spec.kind)}, {"n", spec.n},       {"d", spec.d},
                {"dim", spec.dim},                     {"p_initial", spec.p_initial},
                {"family_seed", spec.family_seed},     {"r", spec.r}};
}

json model_to_json(const OpenParams& params) {
    return json{{"mode", open_mode_name(params.mode)},
                {"p_open", params.p_open},
                {"p_left", params.p_left},
                {"p_right", params.p_right}};
}

OpenModel model_with_seed(const OpenParams& params, uint64_t seed) {
    OpenModel model;
    model.mode = params.mode;
    model.p_open = params.p_open;
    model.p_left = params.p_left;
    model.p_right = params.p_right;
    model.seed = seed;
    return model;
}

struct SimulateResult {
    Environment env;
    Trajectory traj;
    json summary;
};

SimulateResult run_simulate(const RunConfig& config) {
    if (config.model.mode == OpenMode::kLeftRight && !allows_left_right(config.family))
        throw ConfigError("left-right model requires a family on [n] with a linear order");

    EdgeSet e0 = make_family(config.family);
    uint64_t open_seed = derive_seed(config.base_seed, 0);

    Environment env;
    Trajectory traj;
    switch (config.dynamics.kind) {
        case DynamicsKind::kTransitive: {
            env = make_environment(e0, sample_open(e0, model_with_seed(config.model, open_seed)));
            traj = run(env);
            break;
        }
        case DynamicsKind::kKd: {
            if (!e0.is_symmetric())
                throw ConfigError("kd dynamics requires an unoriented family");
            env = make_environment(
                e0, sample_open_symmetric(e0, model_with_seed(config.model, open_seed)));
            traj = run_kd_completion(env, config.dynamics.d);
            break;
        }
        case DynamicsKind::kTilde: {
            if (config.family.kind != FamilyKind::kLinearOriented)
                throw ConfigError("tilde dynamics requires the linear-oriented family");
            OpenParams params = config.model;
            if (params.mode == OpenMode::kLeftRight && params.p_left != 0.0)
                throw ConfigError("tilde dynamics requires p_left = 0");
            EdgeSet open = sample_open(e0, model_with_seed(params, open_seed));
            env = make_environment(std::move(e0), std::move(open));
            traj = run_tilde(env.open);
            break;
        }
    }

    DistanceMatrix dist(env.e0);
    LengthSplit lengths = longest_occupied_length(env, traj, dist);
    uint64_t occupied = env.e0.count();
    uint64_t never = 0;
    env.open.for_each_edge([&](int i, int j) {
        if (traj.occupied(i, j)) ++occupied;
        else ++never;
    });

    SimulateResult result;
    result.summary = json{{"n", env.n},
                          {"e0_edges", env.e0.count()},
                          {"open_edges", env.open.count()},
                          {"occupied_edges", occupied},
                          {"never_occupied_open_edges", never},
                          {"saturated", is_saturated(env, traj)},
                          {"rounds", traj.t_max()},
                          {"max_right", lengths.max_right},
                          {"max_left", lengths.max_left}};
    result.env = std::move(env);
    result.traj = std::move(traj);
    return result;
}

int cmd_simulate(const RunConfig& config, std::ostream& diag) {
    SimulateResult sim = run_simulate(config);
    if (!config.output.ppm.empty()) {
        RenderSpec spec;
        spec.scale = config.output.scale;
        render_matrix(sim.env, sim.traj, spec, config.output.ppm);
    }
    json summary{{"config", config_to_json(config)}, {"result", sim.summary}};
    emit_json(config, summary, diag);
    return 0;
}

int cmd_render(const RunConfig& config, std::ostream& diag) {
    if (config.input.empty()) throw ConfigError("render requires input (a stored run summary)");
    if (config.output.ppm.empty()) throw ConfigError("render requires output.ppm");
    std::ifstream in(config.input);
    if (!in) throw ConfigError("cannot open " + config.input);
    json stored;
    try {
        in >> stored;
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse " + config.input + ": " + e.what());
    }
    if (!stored.contains("config")) throw ConfigError(config.input + " has no config echo");
    RunConfig replay = parse_config(stored.at("config"));
    replay.command = Command::kSimulate;
    replay.output = config.output;

    SimulateResult sim = run_simulate(replay);
    RenderSpec spec;
    spec.scale = config.output.scale;
    render_matrix(sim.env, sim.traj, spec, config.output.ppm);
    json summary{{"config", config_to_json(config)},
                 {"result", json{{"written", config.output.ppm}}}};
    emit_json(config, summary, diag);
    return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& diag) {
    std::vector<OpenParams> grid;
    if (config.model.mode == OpenMode::kUniform) {
        for (double p : config.experiment.grid_p_open) {
            OpenParams params;
            params.mode = OpenMode::kUniform;
            params.p_open = p;
            grid.push_back(params);
        }
    } else {
        for (double pl : config.experiment.grid_p_left)
            for (double pr : config.experiment.grid_p_right) {
                OpenParams params;
                params.mode = OpenMode::kLeftRight;
                params.p_left = pl;
                params.p_right = pr;
                grid.push_back(params);
            }
    }
    if (grid.empty()) throw ConfigError("sweep needs a nonempty probability grid");
    if (config.model.mode == OpenMode::kLeftRight && !allows_left_right(config.family))
        throw ConfigError("left-right model requires a family on [n] with a linear order");

    ExperimentContext ctx = make_context(config.family);
    SweepResult result = sweep(ctx, grid, config.experiment.trials, config.base_seed,
                               config.threads, config.experiment.coupled,
                               config.experiment.regime_alpha);

    if (!config.output.csv.empty()) {
        std::string csv = kCsvHeader;
        for (const SweepCell& cell : result.cells)
            append_trial_rows(csv, config.family, ctx.e0.n(), cell.params, cell.outcomes);
        write_text_file(config.output.csv, csv);
    }

    json cells = json::array();
    for (const SweepCell& cell : result.cells) {
        auto [pl, pr] = display_densities(cell.params);
        json histogram;
        for (int k = 0; k < 5; ++k)
            histogram[regime_kind_name(static_cast<RegimeKind>(k))] = cell.regime_histogram[k];
        cells.push_back(json{{"p_left", pl},
                             {"p_right", pr},
                             {"trials", cell.sat.trials},
                             {"saturated", cell.sat.successes},
                             {"estimate", cell.sat.estimate},
                             {"ci_lo", cell.sat.ci.lo},
                             {"ci_hi", cell.sat.ci.hi},
                             {"mean_max_right", cell.mean_max_right},
                             {"mean_max_left", cell.mean_max_left},
                             {"regimes", histogram}});
    }
    json summary{{"config", config_to_json(config)},
                 {"coupled", result.coupled},
                 {"occupied_monotone_violations", result.occupied_monotone_violations},
                 {"indicator_monotone_violations", result.indicator_monotone_violations},
                 {"cells", cells}};
    emit_json(config, summary, diag);
    return 0;
}

int cmd_pc(const RunConfig& config, std::ostream& diag) {
    ExperimentContext ctx = make_context(config.family);
    PcEstimate est = estimate_pc(ctx, config.experiment.trials, config.experiment.tolerance,
                                 config.base_seed, config.threads);
    if (!config.output.csv.empty()) {
        std::string csv = "probe,p,trials,successes,freq\n";
        for (size_t idx = 0; idx < est.probes.size(); ++idx) {
            const PcProbe& pr = est.probes[idx];
            csv += std::to_string(idx) + ',' + fmt_double(pr.p) + ',' + std::to_string(pr.trials) +
                   ',' + std::to_string(pr.successes) + ',' + fmt_double(pr.freq) + '\n';
        }
        write_text_file(config.output.csv, csv);
    }
    json probes = json::array();
    for (const PcProbe& pr : est.probes)
        probes.push_back(json{{"p", pr.p}, {"trials", pr.trials}, {"successes", pr.successes},
                              {"freq", pr.freq}});
    json summary{{"config", config_to_json(config)},
                 {"ok", est.ok},
                 {"p_hat", est.p_hat},
                 {"error", est.error},
                 {"probes", probes}};
    emit_json(config, summary, diag);
    return 0;
}

int cmd_tc3(const RunConfig& config, std::ostream& diag) {
    if (config.experiment.n_list.empty()) throw ConfigError("tc3 needs a nonempty n_list");
    std::vector<Tc3Row> rows = tc3_curve(config.experiment.alpha, config.experiment.n_list,
                                         config.experiment.trials, config.base_seed,
                                         config.threads);
    double limit = std::exp(-config.experiment.alpha * config.experiment.alpha);
    if (!config.output.csv.empty()) {
        std::string csv = "n,p_right,trials,successes,estimate,ci_lo,ci_hi,limit\n";
        for (const Tc3Row& row : rows)
            csv += std::to_string(row.n) + ',' + fmt_double(row.p_right) + ',' +
                   std::to_string(row.est.trials) + ',' + std::to_string(row.est.successes) + ',' +
                   fmt_double(row.est.estimate) + ',' + fmt_double(row.est.ci.lo) + ',' +
                   fmt_double(row.est.ci.hi) + ',' + fmt_double(limit) + '\n';
        write_text_file(config.output.csv, csv);
    }
    json jrows = json::array();
    for (const Tc3Row& row : rows)
        jrows.push_back(json{{"n", row.n},
                             {"p_right", row.p_right},
                             {"trials", row.est.trials},
                             {"successes", row.est.successes},
                             {"estimate", row.est.estimate},
                             {"ci_lo", row.est.ci.lo},
                             {"ci_hi", row.est.ci.hi}});
    json summary{{"config", config_to_json(config)}, {"limit", limit}, {"rows", jrows}};
    emit_json(config, summary, diag);
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& diag) {
    VerifyOptions options;
    options.max_n = config.experiment.max_n;
    options.instances = config.experiment.instances;
    options.base_seed = config.base_seed;
    std::vector<LemmaResult> results = run_verify_suite(options);
    bool pass = true;
    json jresults = json::array();
    for (const LemmaResult& r : results) {
        pass = pass && r.pass;
        jresults.push_back(json{{"name", r.name},
                                {"instances", r.instances},
                                {"violations", r.violations},
                                {"pass", r.pass},
                                {"detail", r.detail}});
        diag << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.instances
             << " instances, " << r.violations << " violations)\n";
    }
    json summary{{"config", config_to_json(config)}, {"pass", pass}, {"results", jresults}};
    emit_json(config, summary, diag);
    return pass ? 0 : 1;
}

int cmd_catalan(const RunConfig& config, std::ostream& diag) {
    if (config.experiment.ell_min < 2 || config.experiment.ell_max < config.experiment.ell_min)
        throw ConfigError("catalan needs 2 <= ell_min <= ell_max");
    json jrows = json::array();
    std::string csv = "ell,count,method,all_expected_size\n";
    bool all_ok = true;
    for (int ell = config.experiment.ell_min; ell <= config.experiment.ell_max; ++ell) {
        CatalanSetsReport report = catalan_minimal_sets(ell);
        all_ok = all_ok && report.all_expected_size;
        jrows.push_back(json{{"ell", ell},
                             {"count", report.count},
                             {"method", report.method},
                             {"all_expected_size", report.all_expected_size}});
        csv += std::to_string(ell) + ',' + std::to_string(report.count) + ',' + report.method +
               ',' + (report.all_expected_size ? "1" : "0") + '\n';
        diag << "ell " << ell << ": " << report.count << " minimal sets (" << report.method
             << ")\n";
    }
    if (!config.output.csv.empty()) write_text_file(config.output.csv, csv);
    json summary{{"config", config_to_json(config)}, {"rows", jrows}};
    emit_json(config, summary, diag);
    return all_ok ? 0 : 1;
}

} // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(doc, "config",
                   {"command", "base_seed", "threads", "family", "model", "dynamics", "experiment",
                    "output", "input"});
    RunConfig config;
    if (!doc.contains("command")) throw ConfigError("config needs a \"command\"");
    config.command = command_from_name(doc.at("command").get<std::string>());
    config.base_seed = get_or<uint64_t>(doc, "base_seed", 0);
    config.threads = get_or<int>(doc, "threads", 0);
    if (doc.contains("family")) config.family = parse_family(doc.at("family"));
    if (doc.contains("model")) config.model = parse_model(doc.at("model"));
    if (doc.contains("dynamics")) config.dynamics = parse_dynamics(doc.at("dynamics"));
    if (doc.contains("experiment")) config.experiment = parse_experiment(doc.at("experiment"));
    if (doc.contains("output")) config.output = parse_output(doc.at("output"));
    config.input = get_or<std::string>(doc, "input", "");
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse config file " + path + ": " + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const RunConfig& config) {
    json exp{{"trials", config.experiment.trials},
             {"alpha", config.experiment.alpha},
             {"n_list", config.experiment.n_list},
             {"grid_p_open", config.experiment.grid_p_open},
             {"grid_p_left", config.experiment.grid_p_left},
             {"grid_p_right", config.experiment.grid_p_right},
             {"tolerance", config.experiment.tolerance},
             {"coupled", config.experiment.coupled},
             {"instances", config.experiment.instances},
             {"max_n", config.experiment.max_n},
             {"ell_min", config.experiment.ell_min},
             {"ell_max", config.experiment.ell_max},
             {"regime_alpha", config.experiment.regime_alpha}};
    std::string dyn_kind = config.dynamics.kind == DynamicsKind::kTransitive ? "transitive"
                           : config.dynamics.kind == DynamicsKind::kKd       ? "kd"
                                                                             : "tilde";
    return json{{"command", command_name(config.command)},
                {"base_seed", config.base_seed},
                {"threads", config.threads},
                {"family", family_to_json(config.family)},
                {"model", model_to_json(config.model)},
                {"dynamics", json{{"kind", dyn_kind}, {"d", config.dynamics.d}}},
                {"experiment", exp},
                {"output", json{{"json", config.output.json},
                                {"csv", config.output.csv},
                                {"ppm", config.output.ppm},
                                {"scale", config.output.scale}}},
                {"input", config.input}};
}

std::string command_name(Command command) {
    switch (command) {
        case Command::kSimulate: return "simulate";
        case Command::kSweep: return "sweep";
        case Command::kPc: return "pc";
        case Command::kTc3: return "tc3";
        case Command::kVerify: return "verify";
        case Command::kRender: return "render";
        case Command::kCatalan: return "catalan";
    }
    throw std::logic_error("unknown command");
}

Command command_from_name(const std::string& name) {
    if (name == "simulate") return Command::kSimulate;
    if (name == "sweep") return Command::kSweep;
    if (name == "pc") return Command::kPc;
    if (name == "tc3") return Command::kTc3;
    if (name == "verify") return Command::kVerify;
    if (name == "render") return Command::kRender;
    if (name == "catalan") return Command::kCatalan;
    throw ConfigError("unknown command: " + name);
}

int execute(const RunConfig& config, std::ostream& diag) {
    switch (config.command) {
        case Command::kSimulate: return cmd_simulate(config, diag);
        case Command::kSweep: return cmd_sweep(config, diag);
        case Command::kPc: return cmd_pc(config, diag);
        case Command::kTc3: return cmd_tc3(config, diag);
        case Command::kVerify: return cmd_verify(config, diag);
        case Command::kRender: return cmd_render(config, diag);
        case Command::kCatalan: return cmd_catalan(config, diag);
    }
    throw std::logic_error("unknown command");
}

} // namespace tcperc
