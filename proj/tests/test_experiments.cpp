#include <doctest.h>

#include <cmath>

#include "tcperc/dynamics.hpp"
#include "tcperc/experiments.hpp"
#include "tcperc/rng.hpp"
#include "test_helpers.hpp"

using namespace tcperc;
using tcperc::testing::edges;
using tcperc::testing::env_of;
using tcperc::testing::unoriented_chain;

namespace {

ExperimentContext linear_ctx(int n, FamilyKind kind = FamilyKind::kLinearUnoriented) {
    FamilySpec spec;
    spec.kind = kind;
    spec.n = n;
    return make_context(spec);
}

} // namespace

TEST_CASE("wilson intervals contain the estimate and shrink with trials") {
    for (int successes : {0, 3, 10, 20}) {
        WilsonInterval w = wilson_interval(successes, 20);
        double phat = successes / 20.0;
        CHECK(w.lo <= phat + 1e-12);
        CHECK(w.hi >= phat - 1e-12);
        CHECK(w.lo >= 0.0);
        CHECK(w.hi <= 1.0);
    }
    double width100 = wilson_interval(50, 100).hi - wilson_interval(50, 100).lo;
    double width400 = wilson_interval(200, 400).hi - wilson_interval(200, 400).lo;
    double width1600 = wilson_interval(800, 1600).hi - wilson_interval(800, 1600).lo;
    CHECK(width400 < width100);
    CHECK(width1600 < width400);
    CHECK(width400 / width1600 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("saturation probability: degenerate densities") {
    ExperimentContext ctx = linear_ctx(20);
    OpenParams everything;
    everything.mode = OpenMode::kUniform;
    everything.p_open = 1.0;
    SatEstimate full = saturation_prob(ctx, everything, 10, 1, 2);
    CHECK(full.estimate == 1.0);

    OpenParams nothing;
    nothing.mode = OpenMode::kUniform;
    nothing.p_open = 0.0;
    SatEstimate empty = saturation_prob(ctx, nothing, 10, 1, 2);
    CHECK(empty.estimate == 1.0); // vacuously saturated, documented edge case
}

TEST_CASE("trial outcomes are reproducible from (base_seed, index)") {
    ExperimentContext ctx = linear_ctx(40);
    OpenParams params;
    params.mode = OpenMode::kLeftRight;
    params.p_left = 0.25;
    params.p_right = 0.3;
    std::vector<TrialOutcome> batch = run_trials(ctx, params, 8, 99, 2);
    for (int t = 0; t < 8; ++t) {
        TrialOutcome solo = run_single_trial(ctx, params, derive_seed(99, t));
        CHECK(solo.seed == batch[t].seed);
        CHECK(solo.saturated == batch[t].saturated);
        CHECK(solo.max_right == batch[t].max_right);
        CHECK(solo.max_left == batch[t].max_left);
        CHECK(solo.rounds == batch[t].rounds);
        CHECK(solo.occupied_count == batch[t].occupied_count);
    }
    // Thread count does not change results.
    std::vector<TrialOutcome> serial = run_trials(ctx, params, 8, 99, 1);
    for (int t = 0; t < 8; ++t) CHECK(serial[t].seed == batch[t].seed);
}

TEST_CASE("classify_regime precedence on crafted instances") {
    const double alpha = 1.0; // cutoff alpha * log(10) ~ 2.30 on n = 10

    // Saturated beats everything (checked before subcritical).
    Environment sat = env_of(unoriented_chain(10), edges(10, {{1, 3}}));
    Trajectory sat_traj = run(sat);
    REQUIRE(is_saturated(sat, sat_traj));
    CHECK(classify_regime(sat, sat_traj, alpha).kind == RegimeKind::kSaturated);

    // No opens: subcritical, not vacuously saturated.
    Environment none = env_of(unoriented_chain(10), EdgeSet(10));
    CHECK(classify_regime(none, run(none), alpha).kind == RegimeKind::kSubcritical);

    // Rightward ladder 1->3->4->5 all occupied (lengths up to 4), one long
    // leftward edge open but unreachable: intermediate-right.
    Environment ir = env_of(unoriented_chain(10), edges(10, {{1, 3}, {1, 4}, {1, 5}, {9, 1}}));
    Trajectory ir_traj = run(ir);
    REQUIRE(ir_traj.occupied(1, 5));
    REQUIRE(!ir_traj.occupied(9, 1));
    CHECK(classify_regime(ir, ir_traj, alpha).kind == RegimeKind::kIntermediateRight);

    // Mirrored: intermediate-left.
    Environment il = env_of(unoriented_chain(10), edges(10, {{3, 1}, {4, 1}, {5, 1}, {1, 9}}));
    Trajectory il_traj = run(il);
    REQUIRE(il_traj.occupied(5, 1));
    REQUIRE(!il_traj.occupied(1, 9));
    CHECK(classify_regime(il, il_traj, alpha).kind == RegimeKind::kIntermediateLeft);

    // Occupied length-3 edge above the cutoff plus an unoccupied long
    // rightward edge: other.
    Environment other = env_of(unoriented_chain(10), edges(10, {{1, 3}, {1, 4}, {2, 9}}));
    Trajectory other_traj = run(other);
    REQUIRE(other_traj.occupied(1, 4));
    REQUIRE(!other_traj.occupied(2, 9));
    CHECK(classify_regime(other, other_traj, alpha).kind == RegimeKind::kOther);
}

TEST_CASE("classify_regime rejects tiny vertex sets") {
    Environment env = env_of(unoriented_chain(4), EdgeSet(4));
    CHECK_THROWS_AS(classify_regime(env, run(env), 1.0), std::invalid_argument);
}

TEST_CASE("sweep: single cell reduces to saturation_prob") {
    ExperimentContext ctx = linear_ctx(30);
    OpenParams cell;
    cell.mode = OpenMode::kUniform;
    cell.p_open = 0.35;
    SweepResult result = sweep(ctx, {cell}, 16, 5, 2, false, 4.0);
    REQUIRE(result.cells.size() == 1);
    CHECK(result.cells[0].sat.trials == 16);
    int manual = 0;
    for (int t = 0; t < 16; ++t) {
        uint64_t seed = derive_seed(5, 0, t);
        CHECK(result.cells[0].outcomes[t].seed == seed);
        if (run_single_trial(ctx, cell, seed).saturated) ++manual;
    }
    CHECK(result.cells[0].sat.successes == manual);
    SatEstimate direct = saturation_prob(ctx, cell, 16, derive_seed(5, 0), 2);
    CHECK(direct.successes == manual);
}

TEST_CASE("coupled sweep: occupied sets grow along the grid") {
    ExperimentContext ctx = linear_ctx(40);
    std::vector<OpenParams> grid;
    for (double p : {0.05, 0.15, 0.25, 0.35, 0.45}) {
        OpenParams cell;
        cell.mode = OpenMode::kUniform;
        cell.p_open = p;
        grid.push_back(cell);
    }
    SweepResult result = sweep(ctx, grid, 12, 7, 2, true, 4.0);
    CHECK(result.coupled);
    CHECK(result.occupied_monotone_violations == 0);
}

TEST_CASE("estimate_pc: complete graph has threshold zero") {
    FamilySpec spec;
    spec.kind = FamilyKind::kErInitial;
    spec.n = 12;
    spec.p_initial = 1.0;
    spec.family_seed = 1;
    ExperimentContext ctx = make_context(spec);
    PcEstimate est = estimate_pc(ctx, 10, 1.0 / 256.0, 3, 2);
    CHECK(est.ok);
    CHECK(est.p_hat == 0.0);
}

TEST_CASE("estimate_pc: oriented chain cannot saturate under the uniform model") {
    ExperimentContext ctx = linear_ctx(30, FamilyKind::kLinearOriented);
    PcEstimate est = estimate_pc(ctx, 10, 1.0 / 256.0, 3, 2);
    CHECK(!est.ok);
    CHECK(!est.error.empty());
}

TEST_CASE("estimate_pc: bisection brackets a plausible threshold on L_n") {
    ExperimentContext ctx = linear_ctx(60);
    PcEstimate est = estimate_pc(ctx, 40, 1.0 / 64.0, 11, 2);
    REQUIRE(est.ok);
    CHECK(est.p_hat > 0.0);
    CHECK(est.p_hat < 1.0);
    // Smallest probed p with frequency >= 1/2 is the returned threshold.
    for (const PcProbe& probe : est.probes)
        if (probe.freq >= 0.5) CHECK(probe.p >= est.p_hat - 1e-12);
    // Frequencies at the bracket ends.
    bool has_high = false;
    for (const PcProbe& probe : est.probes)
        if (probe.p == est.p_hat) has_high = probe.freq >= 0.5;
    CHECK(has_high);
    // Rerun: bit-identical probes.
    PcEstimate again = estimate_pc(ctx, 40, 1.0 / 64.0, 11, 1);
    REQUIRE(again.probes.size() == est.probes.size());
    for (size_t idx = 0; idx < est.probes.size(); ++idx) {
        CHECK(again.probes[idx].p == est.probes[idx].p);
        CHECK(again.probes[idx].successes == est.probes[idx].successes);
    }
}

TEST_CASE("left-right model is rejected on coordinate families") {
    FamilySpec cube;
    cube.kind = FamilyKind::kHypercube;
    cube.dim = 4;
    ExperimentContext ctx = make_context(cube);
    OpenParams params;
    params.mode = OpenMode::kLeftRight;
    params.p_left = 0.2;
    params.p_right = 0.2;
    CHECK_THROWS_AS(run_single_trial(ctx, params, 1), std::invalid_argument);
}

TEST_CASE("tc3 curve rejects impossible densities") {
    CHECK_THROWS_AS(tc3_curve(25.0, {100}, 4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(tc3_curve(1.0, {50}, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("tc3 at alpha=0 is certain saturation") {
    std::vector<Tc3Row> rows = tc3_curve(0.0, {100, 150}, 6, 9, 2);
    for (const Tc3Row& row : rows) {
        CHECK(row.p_right == 1.0);
        CHECK(row.est.estimate == 1.0);
    }
}
