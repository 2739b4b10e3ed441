#include "tcperc/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "tcperc/dynamics.hpp"
#include "tcperc/rng.hpp"

namespace tcperc {

Thresholds thresholds_of(const OpenParams& params) {
    OpenModel m;
    m.mode = params.mode;
    m.p_open = params.p_open;
    m.p_left = params.p_left;
    m.p_right = params.p_right;
    return thresholds_of(m);
}

std::pair<double, double> display_densities(const OpenParams& params) {
    if (params.mode == OpenMode::kUniform) return {params.p_open, params.p_open};
    return {params.p_left, params.p_right};
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(resolve_threads(threads), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                int i = cursor.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (std::thread& t : pool) t.join();
}

ExperimentContext make_context(const FamilySpec& spec) {
    ExperimentContext ctx;
    ctx.family = spec;
    ctx.e0 = make_family(spec);
    ctx.dist = DistanceMatrix(ctx.e0);
    return ctx;
}

namespace {

TrialOutcome summarize(const ExperimentContext& ctx, const Environment& env,
                       const Trajectory& traj, uint64_t seed) {
    TrialOutcome out;
    out.seed = seed;
    out.saturated = is_saturated(env, traj);
    LengthSplit lengths = longest_occupied_length(env, traj, ctx.dist);
    out.max_right = lengths.max_right;
    out.max_left = lengths.max_left;
    out.rounds = traj.t_max();
    out.occupied_count = env.e0.count();
    env.open.for_each_edge([&](int i, int j) {
        if (traj.occupied(i, j)) ++out.occupied_count;
    });
    return out;
}

} // namespace

TrialOutcome run_single_trial(const ExperimentContext& ctx, const OpenParams& params,
                              uint64_t trial_seed) {
    if (params.mode == OpenMode::kLeftRight && !allows_left_right(ctx.family))
        throw std::invalid_argument("left-right model needs a family on [n] with a linear order");
    OpenModel model;
    model.mode = params.mode;
    model.p_open = params.p_open;
    model.p_left = params.p_left;
    model.p_right = params.p_right;
    model.seed = trial_seed;
    Environment env = make_environment(ctx.e0, sample_open(ctx.e0, model));
    Trajectory traj = run(env);
    return summarize(ctx, env, traj, trial_seed);
}

std::vector<TrialOutcome> run_trials(const ExperimentContext& ctx, const OpenParams& params,
                                     int trials, uint64_t base_seed, int threads) {
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    std::vector<TrialOutcome> out(trials);
    parallel_for(trials, threads, [&](int t) {
        out[t] = run_single_trial(ctx, params, derive_seed(base_seed, t));
    });
    return out;
}

WilsonInterval wilson_interval(int successes, int trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.96;
    const double nn = trials;
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    WilsonInterval w;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

namespace {

SatEstimate aggregate(const std::vector<TrialOutcome>& outcomes) {
    SatEstimate est;
    est.trials = static_cast<int>(outcomes.size());
    for (const TrialOutcome& o : outcomes) est.successes += o.saturated ? 1 : 0;
    est.estimate = est.trials ? static_cast<double>(est.successes) / est.trials : 0.0;
    est.ci = wilson_interval(est.successes, est.trials);
    return est;
}

} // namespace

SatEstimate saturation_prob(const ExperimentContext& ctx, const OpenParams& params, int trials,
                            uint64_t base_seed, int threads) {
    return aggregate(run_trials(ctx, params, trials, base_seed, threads));
}

std::vector<Tc3Row> tc3_curve(double alpha, const std::vector<int>& n_list, int trials,
                              uint64_t base_seed, int threads) {
    std::vector<Tc3Row> rows;
    for (size_t idx = 0; idx < n_list.size(); ++idx) {
        int n = n_list[idx];
        if (n < 100) throw std::invalid_argument("tc3_curve: each n must be >= 100");
        double p_right = 1.0 - alpha / std::sqrt(static_cast<double>(n));
        if (p_right < 0.0 || p_right > 1.0)
            throw std::invalid_argument("tc3_curve: alpha too large for n (density outside [0,1])");
        FamilySpec spec;
        spec.kind = FamilyKind::kLinearOriented;
        spec.n = n;
        ExperimentContext ctx = make_context(spec);
        OpenParams params;
        params.mode = OpenMode::kLeftRight;
        params.p_left = 0.0;
        params.p_right = p_right;
        Tc3Row row;
        row.n = n;
        row.p_right = p_right;
        row.est = saturation_prob(ctx, params, trials, derive_seed(base_seed, idx), threads);
        rows.push_back(row);
    }
    return rows;
}

std::string regime_kind_name(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::kSaturated: return "SATURATED";
        case RegimeKind::kIntermediateRight: return "INTERMEDIATE_RIGHT";
        case RegimeKind::kIntermediateLeft: return "INTERMEDIATE_LEFT";
        case RegimeKind::kSubcritical: return "SUBCRITICAL";
        case RegimeKind::kOther: return "OTHER";
    }
    throw std::logic_error("unknown regime kind");
}

RegimeLabel classify_regime(const Environment& env, const Trajectory& traj, double alpha) {
    if (env.n < 8) throw std::invalid_argument("classify_regime: needs n >= 8");
    const double cutoff = alpha * std::log(static_cast<double>(env.n));

    bool any_open = false, all_occupied = true;
    bool any_long_open_right = false, any_long_open_left = false;
    bool long_right_all_occupied = true, long_left_all_occupied = true;
    bool occupied_long_right = false, occupied_long_left = false;
    int max_len = 0;

    env.open.for_each_edge([&](int i, int j) {
        any_open = true;
        bool occ = traj.occupied(i, j);
        if (!occ) all_occupied = false;
        int len = std::abs(j - i);
        bool is_long = static_cast<double>(len) > cutoff;
        if (occ && len > max_len) max_len = len;
        if (j > i && is_long) {
            any_long_open_right = true;
            if (occ) occupied_long_right = true;
            else long_right_all_occupied = false;
        }
        if (j < i && is_long) {
            any_long_open_left = true;
            if (occ) occupied_long_left = true;
            else long_left_all_occupied = false;
        }
    });

    RegimeLabel label;
    label.alpha = alpha;
    if (any_open && all_occupied) {
        label.kind = RegimeKind::kSaturated;
    } else if (any_long_open_right && long_right_all_occupied && !occupied_long_left) {
        label.kind = RegimeKind::kIntermediateRight;
    } else if (any_long_open_left && long_left_all_occupied && !occupied_long_right) {
        label.kind = RegimeKind::kIntermediateLeft;
    } else if (static_cast<double>(max_len) <= cutoff) {
        label.kind = RegimeKind::kSubcritical;
    } else {
        label.kind = RegimeKind::kOther;
    }
    return label;
}

SweepResult sweep(const ExperimentContext& ctx, const std::vector<OpenParams>& grid, int trials,
                  uint64_t base_seed, int threads, bool coupled, double regime_alpha) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");

    SweepResult result;
    result.coupled = coupled;
    result.cells.resize(grid.size());
    for (size_t c = 0; c < grid.size(); ++c) {
        result.cells[c].params = grid[c];
        result.cells[c].outcomes.resize(trials);
    }

    std::vector<std::array<int, 5>> histograms(grid.size() * trials, std::array<int, 5>{});
    std::vector<uint8_t> occ_violation(trials, 0), ind_violation(trials, 0);

    if (coupled) {
        parallel_for(trials, threads, [&](int t) {
            uint64_t field_seed = derive_seed(base_seed, t);
            EdgeSet prev_occ;
            Thresholds prev_th;
            bool have_prev = false;
            bool prev_sat = false;
            for (size_t c = 0; c < grid.size(); ++c) {
                Thresholds th = thresholds_of(grid[c]);
                EdgeSet open = open_at_thresholds(ctx.e0, field_seed, th);
                Environment env = make_environment(ctx.e0, std::move(open));
                Trajectory traj = run(env);
                TrialOutcome outcome = summarize(ctx, env, traj, field_seed);
                EdgeSet occ = traj.final_edge_set();
                if (have_prev && prev_th.rightward <= th.rightward &&
                    prev_th.leftward <= th.leftward) {
                    if (!prev_occ.is_subset_of(occ)) occ_violation[t] = 1;
                    if (prev_sat && !outcome.saturated) ind_violation[t] = 1;
                }
                RegimeLabel label = classify_regime(env, traj, regime_alpha);
                ++histograms[c * trials + t][static_cast<int>(label.kind)];
                result.cells[c].outcomes[t] = outcome;
                prev_occ = std::move(occ);
                prev_th = th;
                prev_sat = outcome.saturated;
                have_prev = true;
            }
        });
    } else {
        parallel_for(trials, threads, [&](int t) {
            for (size_t c = 0; c < grid.size(); ++c) {
                uint64_t seed = derive_seed(base_seed, c, t);
                OpenModel model;
                model.mode = grid[c].mode;
                model.p_open = grid[c].p_open;
                model.p_left = grid[c].p_left;
                model.p_right = grid[c].p_right;
                model.seed = seed;
                Environment env = make_environment(ctx.e0, sample_open(ctx.e0, model));
                Trajectory traj = run(env);
                result.cells[c].outcomes[t] = summarize(ctx, env, traj, seed);
                RegimeLabel label = classify_regime(env, traj, regime_alpha);
                ++histograms[c * trials + t][static_cast<int>(label.kind)];
            }
        });
    }

    for (int t = 0; t < trials; ++t) {
        result.occupied_monotone_violations += occ_violation[t];
        result.indicator_monotone_violations += ind_violation[t];
    }
    for (size_t c = 0; c < grid.size(); ++c) {
        SweepCell& cell = result.cells[c];
        cell.sat = aggregate(cell.outcomes);
        double sum_r = 0.0, sum_l = 0.0;
        for (const TrialOutcome& o : cell.outcomes) {
            sum_r += o.max_right;
            sum_l += o.max_left;
        }
        cell.mean_max_right = sum_r / trials;
        cell.mean_max_left = sum_l / trials;
        for (int t = 0; t < trials; ++t)
            for (int k = 0; k < 5; ++k) cell.regime_histogram[k] += histograms[c * trials + t][k];
    }
    return result;
}

PcEstimate estimate_pc(const ExperimentContext& ctx, int trials_per_probe, double tolerance,
                       uint64_t base_seed, int threads) {
    if (tolerance < 1.0 / 256.0)
        throw std::invalid_argument("estimate_pc: tolerance must be >= 1/256");
    if (trials_per_probe < 1) throw std::invalid_argument("estimate_pc: trials must be >= 1");

    PcEstimate est;

    // Degenerate families where no pair can ever open saturate at any
    // density; the threshold is 0 by definition.
    const uint64_t max_open_pairs =
        static_cast<uint64_t>(ctx.e0.n()) * (ctx.e0.n() - 1) - ctx.e0.count();
    if (max_open_pairs == 0) {
        est.ok = true;
        est.p_hat = 0.0;
        return est;
    }

    auto probe = [&](double p) {
        std::vector<uint8_t> sat(trials_per_probe, 0);
        parallel_for(trials_per_probe, threads, [&](int t) {
            uint64_t field_seed = derive_seed(base_seed, t);
            EdgeSet open = open_at_thresholds(ctx.e0, field_seed, Thresholds::uniform(p));
            Environment env = make_environment(ctx.e0, std::move(open));
            Trajectory traj = run(env);
            sat[t] = is_saturated(env, traj) ? 1 : 0;
        });
        PcProbe pr;
        pr.p = p;
        pr.trials = trials_per_probe;
        for (uint8_t s : sat) pr.successes += s;
        pr.freq = static_cast<double>(pr.successes) / trials_per_probe;
        est.probes.push_back(pr);
        return pr.freq;
    };

    if (probe(1.0) < 0.5) {
        est.ok = false;
        est.error = "saturation frequency below 1/2 even with every edge open";
        return est;
    }

    double lo = 0.0, hi = 1.0;
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (probe(mid) >= 0.5) hi = mid;
        else lo = mid;
    }
    est.ok = true;
    est.p_hat = hi;
    return est;
}

} // namespace tcperc
