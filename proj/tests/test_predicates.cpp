#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "tcperc/dynamics.hpp"
#include "tcperc/families.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/predicates.hpp"
#include "tcperc/rng.hpp"
#include "test_helpers.hpp"

using namespace tcperc;
using tcperc::testing::edges;
using tcperc::testing::env_of;
using tcperc::testing::oriented_chain;
using tcperc::testing::unoriented_chain;

TEST_CASE("is_saturated trivial cases") {
    Environment env = env_of(unoriented_chain(5), edges(5, {{1, 3}, {2, 5}}));
    CHECK(is_saturated(env, env.e0, {}));
    CHECK(is_saturated(env, env.e0, {2}));
    Environment no_open = env_of(unoriented_chain(5), EdgeSet(5));
    CHECK(is_saturated(no_open, no_open.e0, {1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(is_saturated(env, env.e0, {6}), std::out_of_range);
}

TEST_CASE("is_saturated detects a missing open edge in the subset") {
    Environment env = env_of(unoriented_chain(5), edges(5, {{1, 3}, {2, 5}}));
    EdgeSet occ = env.e0;
    occ.insert(1, 3);
    CHECK(is_saturated(env, occ, {1, 2, 3}));
    CHECK(!is_saturated(env, occ, {1, 2, 3, 4, 5}));
}

TEST_CASE("is_abundant basics") {
    EdgeSet complete(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) complete.insert(i, j);
    CHECK(is_abundant(complete));

    EdgeSet sink = complete;
    sink.erase(2, 1);
    sink.erase(2, 3); // out-degree 0 at vertex 2
    CHECK(!is_abundant(sink));
}

TEST_CASE("abundance holds for dense oriented ER and implies saturation") {
    const int n = 200;
    EdgeSet none(n);
    for (int s = 0; s < 20; ++s) {
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = 0.5;
        model.seed = derive_seed(31337, s);
        EdgeSet sample = sample_open(none, model);
        CHECK(is_abundant(sample));
    }
    // Joint check at modest size: abundance of the fixpoint forces
    // saturation of the full vertex set.
    EdgeSet e0 = unoriented_chain(40);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.p_open = 0.5;
    model.seed = 4242;
    Environment env = env_of(e0, sample_open(e0, model));
    Trajectory traj = run(env);
    EdgeSet fix = traj.final_edge_set();
    REQUIRE(is_abundant(fix));
    CHECK(is_saturated(env, traj));
}

TEST_CASE("edge_length on the linear families and the hypercube") {
    EdgeSet ln = unoriented_chain(12);
    CHECK(edge_length(ln, 3, 10) == 7);

    EdgeSet lno = oriented_chain(6);
    CHECK(!edge_length(lno, 5, 2).has_value());
    CHECK(edge_length(lno, 2, 5) == 3);

    FamilySpec cube;
    cube.kind = FamilyKind::kHypercube;
    cube.dim = 5;
    EdgeSet hc = make_family(cube);
    CHECK(edge_length(hc, 1, 32) == 5); // 00000 -> 11111
}

TEST_CASE("strongly_connected basics and oriented ER connectivity rate") {
    EdgeSet single(3);
    CHECK(strongly_connected(single, {2}));
    CHECK(strongly_connected(edges(2, {{1, 2}, {2, 1}}), {1, 2}));
    CHECK(!strongly_connected(edges(2, {{1, 2}}), {1, 2}));

    const int n = 500;
    const double p = 3.0 * std::log(n) / n;
    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    EdgeSet none(n);
    int connected = 0;
    for (int s = 0; s < 100; ++s) {
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = p;
        model.seed = derive_seed(555, s);
        if (strongly_connected(sample_open(none, model), all)) ++connected;
    }
    CHECK(connected >= 95);
}

TEST_CASE("longest occupied length splits by direction") {
    Environment none = env_of(unoriented_chain(9), EdgeSet(9));
    DistanceMatrix dist(none.e0);
    CHECK(longest_occupied_length(none, run(none), dist).max_any == 0);

    Environment cat = env_of(oriented_chain(3), edges(3, {{1, 3}}));
    DistanceMatrix cat_dist(cat.e0);
    LengthSplit split = longest_occupied_length(cat, run(cat), cat_dist);
    CHECK(split.max_right == 2);
    CHECK(split.max_left == 0);

    Environment both =
        env_of(unoriented_chain(9), edges(9, {{1, 3}, {1, 4}, {6, 4}, {6, 3}, {6, 2}}));
    Trajectory traj = run(both);
    REQUIRE(traj.occupied(1, 4));
    REQUIRE(traj.occupied(6, 2));
    LengthSplit s2 = longest_occupied_length(both, traj, DistanceMatrix(both.e0));
    CHECK(s2.max_right == 3);
    CHECK(s2.max_left == 4);
}

TEST_CASE("distance matrix agrees with arithmetic lengths on chains") {
    EdgeSet ln = unoriented_chain(30);
    DistanceMatrix d(ln);
    for (int i = 1; i <= 30; i += 7)
        for (int j = 1; j <= 30; j += 5)
            if (i != j) CHECK(d.at(i, j) == std::abs(i - j));

    EdgeSet lno = oriented_chain(30);
    DistanceMatrix od(lno);
    CHECK(od.at(4, 29) == 25);
    CHECK(od.at(29, 4) == -1);
}

TEST_CASE("path necessity on random instances") {
    for (int idx = 0; idx < 25; ++idx) {
        SplitMix64 rng(derive_seed(31, idx));
        int n = 8 + static_cast<int>(rng.next() % 13);
        EdgeSet e0 = idx % 2 == 0 ? unoriented_chain(n) : oriented_chain(n);
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = 0.15 + 0.35 * rng.uniform01();
        model.seed = rng.next();
        Environment env = env_of(e0, sample_open(e0, model));
        Trajectory traj = run(env);
        DistanceMatrix dist(env.e0);
        env.open.for_each_edge([&](int i, int j) {
            if (traj.occupied(i, j)) CHECK(dist.at(i, j) >= 0);
        });
    }
}
