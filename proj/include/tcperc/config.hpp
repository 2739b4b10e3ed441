#ifndef TCPERC_CONFIG_HPP
#define TCPERC_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcperc/experiments.hpp"
#include "tcperc/families.hpp"

namespace tcperc {

// Config or input-file problems; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { kSimulate, kSweep, kPc, kTc3, kVerify, kRender, kCatalan };

enum class DynamicsKind { kTransitive, kKd, kTilde };

struct DynamicsConfig {
    DynamicsKind kind = DynamicsKind::kTransitive;
    int d = 4; // kKd completion order
};

struct ExperimentConfig {
    int trials = 200;
    double alpha = 1.0;               // tc3 density exponent coefficient
    std::vector<int> n_list;          // tc3 sizes
    std::vector<double> grid_p_open;  // sweep, uniform mode
    std::vector<double> grid_p_left;  // sweep, left-right mode (outer)
    std::vector<double> grid_p_right; // sweep, left-right mode (inner)
    double tolerance = 1.0 / 256.0;   // pc bisection resolution
    bool coupled = false;             // sweep: shared uniforms per trial
    int instances = 50;               // verify suites
    int max_n = 12;                   // verify suites
    int ell_min = 2;                  // catalan
    int ell_max = 6;                  // catalan
    double regime_alpha = 4.0;        // classification cutoff coefficient
};

struct OutputConfig {
    std::string json; // empty: summary to stdout
    std::string csv;  // empty: no CSV
    std::string ppm;  // empty: no image
    int scale = 1;
};

struct RunConfig {
    Command command = Command::kSimulate;
    uint64_t base_seed = 0;
    int threads = 0; // 0 = hardware concurrency
    FamilySpec family;
    OpenParams model;
    DynamicsConfig dynamics;
    ExperimentConfig experiment;
    OutputConfig output;
    std::string input; // render: stored run summary to re-render
};

// Strict parser: unknown keys anywhere are ConfigErrors with the offending
// path in the message.
RunConfig parse_config(const nlohmann::ordered_json& doc);
RunConfig load_config_file(const std::string& path);

// Fully resolved echo; parse_config(config_to_json(c)) reproduces c.
nlohmann::ordered_json config_to_json(const RunConfig& config);

std::string command_name(Command command);
Command command_from_name(const std::string& name);

// Runs the command, writing the configured outputs. Returns 0 on success
// and 1 when a verification command finds violations. Throws ConfigError
// for config/input/O errors (CLI exit 2).
int execute(const RunConfig& config, std::ostream& diag);

} // namespace tcperc

#endif // TCPERC_CONFIG_HPP
