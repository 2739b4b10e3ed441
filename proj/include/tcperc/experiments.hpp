#ifndef TCPERC_EXPERIMENTS_HPP
#define TCPERC_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tcperc/environment.hpp"
#include "tcperc/families.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/predicates.hpp"

namespace tcperc {

// Open-model parameters without the seed; the per-trial seed is derived
// from the experiment base seed and the trial index.
struct OpenParams {
    OpenMode mode = OpenMode::kUniform;
    double p_open = 0.0;
    double p_left = 0.0;
    double p_right = 0.0;
};

Thresholds thresholds_of(const OpenParams& params);

// Displayed direction densities: (p_left, p_right), both p_open in
// uniform mode (the CSV has fixed columns).
std::pair<double, double> display_densities(const OpenParams& params);

struct TrialOutcome {
    uint64_t seed = 0; // per-trial sampling seed, enough to replay
    bool saturated = false;
    int max_right = 0;
    int max_left = 0;
    int32_t rounds = 0;
    uint64_t occupied_count = 0;
};

// Family edge set and distances, built once and shared by all trials.
struct ExperimentContext {
    FamilySpec family;
    EdgeSet e0;
    DistanceMatrix dist;
};

ExperimentContext make_context(const FamilySpec& spec);

TrialOutcome run_single_trial(const ExperimentContext& ctx, const OpenParams& params,
                              uint64_t trial_seed);

// Trials keyed by derive_seed(base_seed, trial); embarrassingly parallel,
// results identical for every thread count.
std::vector<TrialOutcome> run_trials(const ExperimentContext& ctx, const OpenParams& params,
                                     int trials, uint64_t base_seed, int threads);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

// 95% Wilson score interval (z = 1.96).
WilsonInterval wilson_interval(int successes, int trials);

struct SatEstimate {
    int trials = 0;
    int successes = 0;
    double estimate = 0.0;
    WilsonInterval ci;
};

SatEstimate saturation_prob(const ExperimentContext& ctx, const OpenParams& params, int trials,
                            uint64_t base_seed, int threads);

struct Tc3Row {
    int n = 0;
    double p_right = 0.0;
    SatEstimate est;
};

// Saturation probability of the oriented chain at p_right = 1 - alpha/sqrt(n).
// Throws when the density leaves [0,1].
std::vector<Tc3Row> tc3_curve(double alpha, const std::vector<int>& n_list, int trials,
                              uint64_t base_seed, int threads);

enum class RegimeKind { kSaturated, kIntermediateRight, kIntermediateLeft, kSubcritical, kOther };

struct RegimeLabel {
    RegimeKind kind = RegimeKind::kOther;
    double alpha = 0.0;
};

std::string regime_kind_name(RegimeKind kind);

// Classification against the alpha*log(n) length cutoff, |i - j| lengths
// (vertex set [n]). Precedence: SATURATED, INTERMEDIATE_RIGHT,
// INTERMEDIATE_LEFT, SUBCRITICAL, OTHER. SATURATED needs at least one
// open edge; INTERMEDIATE_* needs at least one long open edge on its
// side (otherwise empty instances would classify vacuously).
RegimeLabel classify_regime(const Environment& env, const Trajectory& traj, double alpha);

struct SweepCell {
    OpenParams params;
    std::vector<TrialOutcome> outcomes;
    SatEstimate sat;
    double mean_max_right = 0.0;
    double mean_max_left = 0.0;
    std::array<int, 5> regime_histogram{}; // indexed by RegimeKind order
};

struct SweepResult {
    std::vector<SweepCell> cells;
    bool coupled = false;
    // Coupled mode: violations of per-trial monotonicity between
    // threshold-comparable consecutive cells (occupied-set containment
    // and the saturation indicator).
    int occupied_monotone_violations = 0;
    int indicator_monotone_violations = 0;
};

SweepResult sweep(const ExperimentContext& ctx, const std::vector<OpenParams>& grid, int trials,
                  uint64_t base_seed, int threads, bool coupled, double regime_alpha);

struct PcProbe {
    double p = 0.0;
    int successes = 0;
    int trials = 0;
    double freq = 0.0;
};

struct PcEstimate {
    bool ok = false;
    double p_hat = 1.0;
    std::vector<PcProbe> probes;
    std::string error; // nonempty when not ok
};

// Bisection for the empirical critical density: smallest probed p with
// saturation frequency >= 1/2, using one shared uniform stream per trial
// across every probe. Resolution: bisection until hi - lo <= tolerance.
PcEstimate estimate_pc(const ExperimentContext& ctx, int trials_per_probe, double tolerance,
                       uint64_t base_seed, int threads);

// Runs fn(0..count-1) on a small worker pool; any thread count yields the
// same results because workers only write their own slots.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

int resolve_threads(int threads);

} // namespace tcperc

#endif // TCPERC_EXPERIMENTS_HPP
