#ifndef TCPERC_RENDER_HPP
#define TCPERC_RENDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcperc/environment.hpp"

namespace tcperc {

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

// Adjacency-matrix occupation-time image: cell (i,j) interpolated from
// `low` (time 0) to `high` (time t_max); closed cells (and the diagonal)
// grey, open-but-never-occupied cells in their own color.
struct RenderSpec {
    Rgb low{0, 0, 255};
    Rgb high{255, 255, 0};
    Rgb closed{128, 128, 128};
    Rgb never{235, 235, 235};
    int scale = 1; // pixels per matrix cell
};

enum class CellStatus { kClosed, kOccupied, kOpenNever };

// Pure per-cell color map; t_max == 0 degenerates to `low`.
Rgb cell_color(CellStatus status, int32_t time, int32_t t_max, const RenderSpec& spec);

// Binary PPM (P6, maxval 255), n*scale pixels square, row i top-to-bottom.
std::vector<uint8_t> render_to_bytes(const Environment& env, const Trajectory& traj,
                                     const RenderSpec& spec);

void render_matrix(const Environment& env, const Trajectory& traj, const RenderSpec& spec,
                   const std::string& path);

} // namespace tcperc

#endif // TCPERC_RENDER_HPP
