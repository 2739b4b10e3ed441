#include <doctest.h>

#include "tcperc/dynamics.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/predicates.hpp"
#include "tcperc/rng.hpp"
#include "test_helpers.hpp"

using namespace tcperc;
using tcperc::testing::edges;
using tcperc::testing::env_of;
using tcperc::testing::oriented_chain;
using tcperc::testing::unoriented_chain;

TEST_CASE("step: single transitive round") {
    Environment env = env_of(edges(3, {{1, 2}, {2, 3}}), edges(3, {{1, 3}}));
    EdgeSet next = step(env, env.e0);
    CHECK(next.contains(1, 3));
    CHECK(next.count() == 3);
}

TEST_CASE("step: nothing open") {
    Environment env = env_of(edges(3, {{1, 2}, {2, 3}}), EdgeSet(3));
    CHECK(step(env, env.e0) == env.e0);
}

TEST_CASE("step: two rounds on the oriented path") {
    Environment env = env_of(edges(4, {{1, 2}, {2, 3}, {3, 4}}), edges(4, {{1, 3}, {1, 4}}));
    EdgeSet first = step(env, env.e0);
    CHECK(first.contains(1, 3));
    CHECK(!first.contains(1, 4));
    EdgeSet second = step(env, first);
    CHECK(second.contains(1, 4));

    Trajectory traj = run(env);
    CHECK(traj.at(1, 3) == 1);
    CHECK(traj.at(1, 4) == 2);
    CHECK(traj.t_max() == 2);
}

TEST_CASE("step rejects inconsistent occupied sets") {
    Environment env = env_of(edges(3, {{1, 2}, {2, 3}}), edges(3, {{1, 3}}));
    CHECK_THROWS_AS(step(env, EdgeSet(4)), std::invalid_argument);
    CHECK_THROWS_AS(step(env, EdgeSet(3)), std::invalid_argument); // missing e0
    EdgeSet stray = env.e0;
    stray.insert(3, 1); // neither e0 nor open
    CHECK_THROWS_AS(step(env, stray), std::invalid_argument);
}

TEST_CASE("run: catalan instance n=3") {
    Environment env = env_of(oriented_chain(3), edges(3, {{1, 3}}));
    Trajectory traj = run(env);
    CHECK(traj.at(1, 3) == 1);
    CHECK(traj.t_max() == 1);
}

TEST_CASE("run: no open edges is the identity") {
    Environment env = env_of(unoriented_chain(5), EdgeSet(5));
    Trajectory traj = run(env);
    CHECK(traj.t_max() == 0);
    CHECK(traj.final_edge_set() == env.e0);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j && !env.e0.contains(i, j)) CHECK(traj.at(i, j) == Trajectory::kNever);
}

TEST_CASE("run matches iterated step on random instances") {
    for (int idx = 0; idx < 20; ++idx) {
        SplitMix64 rng(derive_seed(42, idx));
        int n = 6 + static_cast<int>(rng.next() % 20);
        EdgeSet e0 = idx % 2 == 0 ? unoriented_chain(n) : oriented_chain(n);
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = 0.1 + 0.4 * rng.uniform01();
        model.seed = rng.next();
        Environment env = env_of(e0, sample_open(e0, model));

        Trajectory traj = run(env);
        EdgeSet occ = env.e0;
        int32_t t = 0;
        while (true) {
            EdgeSet next = step(env, occ);
            if (next == occ) break;
            ++t;
            next.for_each_edge([&](int i, int j) {
                if (!occ.contains(i, j)) CHECK(traj.at(i, j) == t);
            });
            occ = next;
        }
        CHECK(traj.t_max() == t);
        CHECK(traj.final_edge_set() == occ);
    }
}

TEST_CASE("trajectory witnesses: every time-t edge has a time-(t-1) witness pair") {
    SplitMix64 rng(7);
    EdgeSet e0 = unoriented_chain(30);
    OpenModel model;
    model.mode = OpenMode::kLeftRight;
    model.p_left = 0.3;
    model.p_right = 0.3;
    model.seed = rng.next();
    Environment env = env_of(e0, sample_open(e0, model));
    Trajectory traj = run(env);
    env.open.for_each_edge([&](int i, int j) {
        int32_t t = traj.at(i, j);
        if (t == Trajectory::kNever) return;
        bool witness = false;
        for (int k = 1; k <= env.n && !witness; ++k) {
            if (k == i || k == j) continue;
            witness = traj.occupied(i, k) && traj.occupied(k, j) && traj.at(i, k) <= t - 1 &&
                      traj.at(k, j) <= t - 1;
        }
        CHECK(witness);
    });
}

TEST_CASE("monotonicity: fixpoint within |open| rounds and growing sets") {
    EdgeSet e0 = unoriented_chain(20);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.p_open = 0.3;
    model.seed = 99;
    Environment env = env_of(e0, sample_open(e0, model));
    Trajectory traj = run(env);
    CHECK(traj.t_max() <= static_cast<int32_t>(env.open.count()));
    EdgeSet next = step(env, env.e0);
    CHECK(env.e0.is_subset_of(next));
}

TEST_CASE("run_slowed: deterministic single-candidate chain gives a total order") {
    Environment env = env_of(edges(4, {{1, 2}, {2, 3}, {3, 4}}), edges(4, {{1, 3}, {1, 4}}));
    Trajectory traj = run_slowed(env, 5);
    CHECK(traj.at(1, 3) == 1);
    CHECK(traj.at(1, 4) == 2);
    CHECK(traj.t_max() == 2);
}

TEST_CASE("run_slowed reaches run's fixpoint for several seeds") {
    for (int idx = 0; idx < 10; ++idx) {
        SplitMix64 rng(derive_seed(1234, idx));
        int n = 10 + static_cast<int>(rng.next() % 31); // up to 40
        EdgeSet e0 = unoriented_chain(n);
        OpenModel model;
        model.mode = OpenMode::kLeftRight;
        model.p_left = 0.05 + 0.45 * rng.uniform01();
        model.p_right = 0.05 + 0.45 * rng.uniform01();
        model.seed = rng.next();
        Environment env = env_of(e0, sample_open(e0, model));
        EdgeSet parallel_final = run(env).final_edge_set();
        for (uint64_t order_seed : {1ULL, 2ULL, 3ULL})
            CHECK(run_slowed(env, order_seed).final_edge_set() == parallel_final);
        CHECK(run_slowed(env, 0, SlowedOrder::kLex).final_edge_set() == parallel_final);
    }
}

TEST_CASE("kd completion: d=3 equals transitive closure on symmetric instances") {
    for (int idx = 0; idx < 15; ++idx) {
        SplitMix64 rng(derive_seed(777, idx));
        int n = 8 + static_cast<int>(rng.next() % 33); // up to 40
        EdgeSet e0 = unoriented_chain(n);
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = 0.1 + 0.5 * rng.uniform01();
        model.seed = rng.next();
        EdgeSet open = sample_open_symmetric(e0, model);
        Environment env = env_of(e0, open);
        CHECK(run_kd_completion(env, 3).final_edge_set() == run(env).final_edge_set());
    }
}

TEST_CASE("kd completion: d=4 band saturates at p=1") {
    int n = 6;
    EdgeSet e0(n), open(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) <= 2) e0.insert(i, j);
            else open.insert(i, j);
        }
    Environment env = env_of(e0, open);
    Trajectory traj = run_kd_completion(env, 4);
    CHECK(is_saturated(env, traj));
}

TEST_CASE("kd completion: no opens leaves e0") {
    Environment env = env_of(unoriented_chain(6), EdgeSet(6));
    Trajectory traj = run_kd_completion(env, 4);
    CHECK(traj.final_edge_set() == env.e0);
}

TEST_CASE("kd completion rejects oriented input") {
    Environment env = env_of(oriented_chain(5), EdgeSet(5));
    CHECK_THROWS_AS(run_kd_completion(env, 3), std::invalid_argument);
    Environment sym = env_of(unoriented_chain(5), EdgeSet(5));
    CHECK_THROWS_AS(run_kd_completion(sym, 2), std::invalid_argument);
}

TEST_CASE("degenerate single-vertex environment has no edges") {
    Environment env = env_of(EdgeSet(1), EdgeSet(1));
    Trajectory traj = run(env);
    CHECK(traj.t_max() == 0);
    CHECK(traj.final_edge_set().empty());
}

TEST_CASE("supercritical chain instance saturates with nucleation-scale rounds") {
    // n = 300 with p_left = p_right = 0.35 sits in the saturation regime;
    // the pinned seed both saturates and needs many rounds (growth from
    // local clusters rather than one parallel sweep).
    EdgeSet e0 = unoriented_chain(300);
    OpenModel model;
    model.mode = OpenMode::kLeftRight;
    model.p_left = 0.35;
    model.p_right = 0.35;
    model.seed = derive_seed(7, 0);
    Environment env = env_of(e0, sample_open(e0, model));
    Trajectory traj = run(env);
    CHECK(is_saturated(env, traj));
    CHECK(traj.t_max() > 10);
}

TEST_CASE("coupled runs are monotone in the threshold") {
    EdgeSet e0 = unoriented_chain(25);
    UniformField field = make_uniform_field(25, 2024);
    EdgeSet prev_occ;
    bool have_prev = false;
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        Environment env = env_of(e0, open_from_field(e0, field, Thresholds::uniform(p)));
        EdgeSet occ = run(env).final_edge_set();
        if (have_prev) CHECK(prev_occ.is_subset_of(occ));
        prev_occ = occ;
        have_prev = true;
    }
}
