#include <doctest.h>

#include <cmath>

#include "tcperc/open_model.hpp"
#include "tcperc/rng.hpp"
#include "test_helpers.hpp"

using namespace tcperc;
using tcperc::testing::oriented_chain;
using tcperc::testing::unoriented_chain;

TEST_CASE("sample_open degenerate densities") {
    EdgeSet e0 = unoriented_chain(12);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.seed = 3;

    model.p_open = 0.0;
    CHECK(sample_open(e0, model).empty());

    model.p_open = 1.0;
    EdgeSet open = sample_open(e0, model);
    CHECK(open.count() == 12 * 11 - e0.count());
    CHECK(!open.intersects(e0));
}

TEST_CASE("left-right with p_left=0 opens only above the diagonal") {
    EdgeSet e0 = oriented_chain(20);
    OpenModel model;
    model.mode = OpenMode::kLeftRight;
    model.p_left = 0.0;
    model.p_right = 0.7;
    model.seed = 17;
    EdgeSet open = sample_open(e0, model);
    CHECK(!open.empty());
    open.for_each_edge([&](int i, int j) {
        CHECK(j > i);
        CHECK(j - i >= 2); // chain edges are initially occupied, never open
    });
}

TEST_CASE("determinism: identical (n, seed, model) gives identical bits") {
    EdgeSet e0 = unoriented_chain(30);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.p_open = 0.37;
    model.seed = 99;
    EdgeSet first = sample_open(e0, model);
    CHECK(first == sample_open(e0, model));
    model.seed = 100;
    CHECK(first != sample_open(e0, model));
}

TEST_CASE("empirical density within three standard errors") {
    const int n = 200;
    const double p = 0.3;
    EdgeSet none(n);
    const int seeds = 100;
    const double pairs = static_cast<double>(n) * (n - 1);
    uint64_t total = 0;
    for (int s = 0; s < seeds; ++s) {
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = p;
        model.seed = derive_seed(2718, s);
        total += sample_open(none, model).count();
    }
    double trials = pairs * seeds;
    double freq = static_cast<double>(total) / trials;
    double se = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(freq - p) <= 3 * se);
}

TEST_CASE("field thresholds: empty at zero, monotone in p") {
    EdgeSet e0 = unoriented_chain(25);
    UniformField field = make_uniform_field(25, 5);
    CHECK(open_from_field(e0, field, Thresholds::uniform(0.0)).empty());
    EdgeSet lo = open_from_field(e0, field, Thresholds::uniform(0.25));
    EdgeSet hi = open_from_field(e0, field, Thresholds::uniform(0.6));
    CHECK(lo.is_subset_of(hi));
    CHECK(!hi.intersects(e0));
}

TEST_CASE("streaming sampler equals the materialized field") {
    EdgeSet e0 = unoriented_chain(40);
    UniformField field = make_uniform_field(40, 123);
    Thresholds th{0.4, 0.2};
    CHECK(open_at_thresholds(e0, 123, th) == open_from_field(e0, field, th));
}

TEST_CASE("field and sample_open use distinct documented streams") {
    EdgeSet none(30);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.p_open = 0.5;
    model.seed = 77;
    EdgeSet direct = sample_open(none, model);
    EdgeSet via_field = open_at_thresholds(none, 77, Thresholds::uniform(0.5));
    CHECK(direct != via_field);
}

TEST_CASE("symmetric sampler pairs both directions") {
    EdgeSet e0 = unoriented_chain(20);
    OpenModel model;
    model.mode = OpenMode::kUniform;
    model.p_open = 0.4;
    model.seed = 8;
    EdgeSet open = sample_open_symmetric(e0, model);
    CHECK(open.is_symmetric());
    CHECK(!open.intersects(e0));
    CHECK(!open.empty());
}
