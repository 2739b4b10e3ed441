#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tcperc/config.hpp"

namespace {

using tcperc::Command;
using tcperc::RunConfig;

struct Flags {
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<int> threads;
    // family
    std::optional<std::string> family;
    std::optional<int> n, d, dim, r;
    std::optional<double> p_initial;
    std::optional<uint64_t> family_seed;
    // model
    std::optional<double> p_open, p_left, p_right;
    // dynamics
    std::optional<std::string> dynamics;
    std::optional<int> kd_d;
    // experiment
    std::optional<int> trials, instances, max_n, ell_min, ell_max;
    std::optional<double> alpha, tolerance, regime_alpha;
    std::vector<int> n_list;
    std::vector<double> grid_p_open, grid_p_left, grid_p_right;
    bool coupled = false;
    bool coupled_set = false;
    // output
    std::optional<std::string> json_path, csv_path, ppm_path, input;
    std::optional<int> scale;
};

void add_common_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file (flags override it)");
    cmd->add_option("--seed", flags.seed, "base seed; all randomness derives from it");
    cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware)");
    cmd->add_option("--json", flags.json_path, "summary JSON path (default: stdout)");
    cmd->add_option("--csv", flags.csv_path, "CSV output path");
}

void add_family_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--family", flags.family,
                    "linear-unoriented|linear-oriented|hamming|hypercube|er-initial|r-pairs|"
                    "chain-left-range");
    cmd->add_option("--n", flags.n, "vertex count (side length for hamming)");
    cmd->add_option("--d", flags.d, "hamming exponent");
    cmd->add_option("--dim", flags.dim, "hypercube dimension");
    cmd->add_option("--p-initial", flags.p_initial, "er-initial edge density");
    cmd->add_option("--family-seed", flags.family_seed, "er-initial seed");
    cmd->add_option("--r", flags.r, "chain-left-range leftward range");
}

void add_model_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--p-open", flags.p_open, "uniform open density");
    cmd->add_option("--p-left", flags.p_left, "leftward open density");
    cmd->add_option("--p-right", flags.p_right, "rightward open density");
}

RunConfig assemble(Command command, const Flags& flags) {
    RunConfig config;
    if (!flags.config_path.empty()) config = tcperc::load_config_file(flags.config_path);
    config.command = command;

    if (flags.seed) config.base_seed = *flags.seed;
    if (flags.threads) config.threads = *flags.threads;

    if (flags.family) config.family.kind = tcperc::family_kind_from_name(*flags.family);
    if (flags.n) config.family.n = *flags.n;
    if (flags.d) config.family.d = *flags.d;
    if (flags.dim) config.family.dim = *flags.dim;
    if (flags.p_initial) config.family.p_initial = *flags.p_initial;
    if (flags.family_seed) config.family.family_seed = *flags.family_seed;
    if (flags.r) config.family.r = *flags.r;

    if (flags.p_open) {
        config.model.mode = tcperc::OpenMode::kUniform;
        config.model.p_open = *flags.p_open;
    }
    if (flags.p_left || flags.p_right) {
        config.model.mode = tcperc::OpenMode::kLeftRight;
        if (flags.p_left) config.model.p_left = *flags.p_left;
        if (flags.p_right) config.model.p_right = *flags.p_right;
    }

    if (flags.dynamics) {
        if (*flags.dynamics == "transitive") config.dynamics.kind = tcperc::DynamicsKind::kTransitive;
        else if (*flags.dynamics == "kd") config.dynamics.kind = tcperc::DynamicsKind::kKd;
        else if (*flags.dynamics == "tilde") config.dynamics.kind = tcperc::DynamicsKind::kTilde;
        else throw tcperc::ConfigError("unknown dynamics kind: " + *flags.dynamics);
    }
    if (flags.kd_d) config.dynamics.d = *flags.kd_d;

    if (flags.trials) config.experiment.trials = *flags.trials;
    if (flags.alpha) config.experiment.alpha = *flags.alpha;
    if (!flags.n_list.empty()) config.experiment.n_list = flags.n_list;
    if (!flags.grid_p_open.empty()) config.experiment.grid_p_open = flags.grid_p_open;
    if (!flags.grid_p_left.empty()) config.experiment.grid_p_left = flags.grid_p_left;
    if (!flags.grid_p_right.empty()) config.experiment.grid_p_right = flags.grid_p_right;
    if (flags.tolerance) config.experiment.tolerance = *flags.tolerance;
    if (flags.coupled_set) config.experiment.coupled = flags.coupled;
    if (flags.instances) config.experiment.instances = *flags.instances;
    if (flags.max_n) config.experiment.max_n = *flags.max_n;
    if (flags.ell_min) config.experiment.ell_min = *flags.ell_min;
    if (flags.ell_max) config.experiment.ell_max = *flags.ell_max;
    if (flags.regime_alpha) config.experiment.regime_alpha = *flags.regime_alpha;

    if (flags.json_path) config.output.json = *flags.json_path;
    if (flags.csv_path) config.output.csv = *flags.csv_path;
    if (flags.ppm_path) config.output.ppm = *flags.ppm_path;
    if (flags.scale) config.output.scale = *flags.scale;
    if (flags.input) config.input = *flags.input;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transitive-closure percolation laboratory"};
    app.require_subcommand(1);

    Flags flags;

    CLI::App* simulate = app.add_subcommand("simulate", "run one instance");
    add_common_flags(simulate, flags);
    add_family_flags(simulate, flags);
    add_model_flags(simulate, flags);
    simulate->add_option("--dynamics", flags.dynamics, "transitive|kd|tilde");
    simulate->add_option("--kd-d", flags.kd_d, "completion order for kd dynamics");
    simulate->add_option("--render", flags.ppm_path, "write the occupation-time image here");
    simulate->add_option("--scale", flags.scale, "pixels per matrix cell");

    CLI::App* sweep = app.add_subcommand("sweep", "density grid Monte Carlo");
    add_common_flags(sweep, flags);
    add_family_flags(sweep, flags);
    add_model_flags(sweep, flags);
    sweep->add_option("--trials", flags.trials, "trials per grid cell");
    sweep->add_option("--grid-p-open", flags.grid_p_open, "uniform density grid")->delimiter(',');
    sweep->add_option("--grid-p-left", flags.grid_p_left, "leftward density grid")->delimiter(',');
    sweep->add_option("--grid-p-right", flags.grid_p_right, "rightward density grid")
        ->delimiter(',');
    sweep->add_flag("--coupled", flags.coupled, "share the uniform field across cells per trial");
    sweep->add_option("--regime-alpha", flags.regime_alpha, "length cutoff coefficient");

    CLI::App* pc = app.add_subcommand("pc", "empirical critical density by bisection");
    add_common_flags(pc, flags);
    add_family_flags(pc, flags);
    pc->add_option("--trials", flags.trials, "trials per probe");
    pc->add_option("--tolerance", flags.tolerance, "bisection resolution (>= 1/256)");

    CLI::App* tc3 = app.add_subcommand("tc3", "saturation limit on the oriented chain");
    add_common_flags(tc3, flags);
    tc3->add_option("--alpha", flags.alpha, "density coefficient: p = 1 - alpha/sqrt(n)");
    tc3->add_option("--n", flags.n_list, "comma-separated sizes")->delimiter(',');
    tc3->add_option("--trials", flags.trials, "trials per size");

    CLI::App* verify = app.add_subcommand("verify", "run the structural lemma suites");
    add_common_flags(verify, flags);
    verify->add_option("--max-n", flags.max_n, "instance size cap for exhaustive oracles");
    verify->add_option("--instances", flags.instances, "instances per suite");

    CLI::App* render = app.add_subcommand("render", "re-render a stored run");
    add_common_flags(render, flags);
    render->add_option("--from", flags.input, "stored run summary JSON")->required();
    render->add_option("--out", flags.ppm_path, "output image path")->required();
    render->add_option("--scale", flags.scale, "pixels per matrix cell");

    CLI::App* catalan = app.add_subcommand("catalan", "minimal-set enumeration table");
    add_common_flags(catalan, flags);
    catalan->add_option("--ell-min", flags.ell_min, "smallest length");
    catalan->add_option("--ell-max", flags.ell_max, "largest length (<= 10)");

    CLI11_PARSE(app, argc, argv);
    flags.coupled_set = sweep->count("--coupled") > 0;

    Command command;
    if (simulate->parsed()) command = Command::kSimulate;
    else if (sweep->parsed()) command = Command::kSweep;
    else if (pc->parsed()) command = Command::kPc;
    else if (tc3->parsed()) command = Command::kTc3;
    else if (verify->parsed()) command = Command::kVerify;
    else if (render->parsed()) command = Command::kRender;
    else command = Command::kCatalan;

    try {
        RunConfig config = assemble(command, flags);
        return tcperc::execute(config, std::cout);
    } catch (const tcperc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
