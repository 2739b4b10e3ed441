#include <doctest.h>

#include "tcperc/dynamics.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/render.hpp"
#include "test_helpers.hpp"

using namespace tcperc;
using tcperc::testing::edges;
using tcperc::testing::env_of;
using tcperc::testing::unoriented_chain;

namespace {

std::vector<uint8_t> pixels_of(const std::vector<uint8_t>& ppm, int side) {
    // Header is "P6\n<w> <h>\n255\n".
    std::string expected = "P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    REQUIRE(ppm.size() == expected.size() + static_cast<size_t>(side) * side * 3);
    CHECK(std::string(ppm.begin(), ppm.begin() + expected.size()) == expected);
    return {ppm.begin() + expected.size(), ppm.end()};
}

Rgb pixel(const std::vector<uint8_t>& px, int side, int row, int col) {
    size_t at = (static_cast<size_t>(row) * side + col) * 3;
    return {px[at], px[at + 1], px[at + 2]};
}

} // namespace

TEST_CASE("two-vertex image: low color off-diagonal, closed on the diagonal") {
    Environment env = env_of(unoriented_chain(2), EdgeSet(2));
    Trajectory traj = run(env);
    RenderSpec spec;
    std::vector<uint8_t> ppm = render_to_bytes(env, traj, spec);
    std::vector<uint8_t> px = pixels_of(ppm, 2);
    CHECK(pixel(px, 2, 0, 0) == spec.closed);
    CHECK(pixel(px, 2, 1, 1) == spec.closed);
    CHECK(pixel(px, 2, 0, 1) == spec.low);
    CHECK(pixel(px, 2, 1, 0) == spec.low);
}

TEST_CASE("degenerate t_max = 0 renders occupied cells in the low color") {
    Environment env = env_of(unoriented_chain(3), edges(3, {{1, 3}}));
    Trajectory traj(3);
    env.e0.for_each_edge([&](int i, int j) { traj.set_time(i, j, 0); });
    RenderSpec spec;
    std::vector<uint8_t> px = pixels_of(render_to_bytes(env, traj, spec), 3);
    CHECK(pixel(px, 3, 0, 1) == spec.low);
    CHECK(pixel(px, 3, 0, 2) == spec.never); // open, never occupied
    CHECK(pixel(px, 3, 2, 0) == spec.closed);
}

TEST_CASE("interpolation endpoints and monotone channel mix") {
    RenderSpec spec;
    CHECK(cell_color(CellStatus::kOccupied, 0, 7, spec) == spec.low);
    CHECK(cell_color(CellStatus::kOccupied, 7, 7, spec) == spec.high);
    Rgb mid = cell_color(CellStatus::kOccupied, 5, 10, spec);
    CHECK(mid.r == 128);
    CHECK(mid.g == 128);
    CHECK(mid.b == 128);
    CHECK(cell_color(CellStatus::kClosed, 3, 7, spec) == spec.closed);
    CHECK(cell_color(CellStatus::kOpenNever, 3, 7, spec) == spec.never);
}

TEST_CASE("scale expands every cell into a block") {
    Environment env = env_of(unoriented_chain(2), EdgeSet(2));
    Trajectory traj = run(env);
    RenderSpec spec;
    spec.scale = 3;
    std::vector<uint8_t> px = pixels_of(render_to_bytes(env, traj, spec), 6);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CHECK(pixel(px, 6, r, c) == spec.closed);
            CHECK(pixel(px, 6, r, 3 + c) == spec.low);
        }
}

TEST_CASE("byte determinism across repeated renders") {
    EdgeSet e0 = unoriented_chain(40);
    OpenModel model;
    model.mode = OpenMode::kLeftRight;
    model.p_left = 0.3;
    model.p_right = 0.3;
    model.seed = 12;
    Environment env = env_of(e0, sample_open(e0, model));
    Trajectory traj = run(env);
    RenderSpec spec;
    CHECK(render_to_bytes(env, traj, spec) == render_to_bytes(env, traj, spec));
}
