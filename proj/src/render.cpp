#include "tcperc/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tcperc {

Rgb cell_color(CellStatus status, int32_t time, int32_t t_max, const RenderSpec& spec) {
    switch (status) {
        case CellStatus::kClosed: return spec.closed;
        case CellStatus::kOpenNever: return spec.never;
        case CellStatus::kOccupied: break;
    }
    double frac = t_max > 0 ? static_cast<double>(time) / static_cast<double>(t_max) : 0.0;
    auto lerp = [&](uint8_t a, uint8_t b) {
        return static_cast<uint8_t>(std::lround(a + (static_cast<double>(b) - a) * frac));
    };
    return {lerp(spec.low.r, spec.high.r), lerp(spec.low.g, spec.high.g),
            lerp(spec.low.b, spec.high.b)};
}

std::vector<uint8_t> render_to_bytes(const Environment& env, const Trajectory& traj,
                                     const RenderSpec& spec) {
    if (traj.n() != env.n) throw std::invalid_argument("render: trajectory does not match environment");
    if (spec.scale < 1) throw std::invalid_argument("render: scale must be >= 1");
    const int n = env.n;
    const int side = n * spec.scale;

    char header[64];
    int header_len = std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n", side, side);

    std::vector<uint8_t> bytes;
    bytes.reserve(static_cast<size_t>(header_len) + static_cast<size_t>(side) * side * 3);
    bytes.insert(bytes.end(), header, header + header_len);

    std::vector<Rgb> row_colors(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            CellStatus status;
            if (i == j) status = CellStatus::kClosed;
            else if (traj.occupied(i, j)) status = CellStatus::kOccupied;
            else if (env.open.contains(i, j)) status = CellStatus::kOpenNever;
            else status = CellStatus::kClosed;
            row_colors[j - 1] = cell_color(status, traj.occupied(i, j) ? traj.at(i, j) : 0,
                                           traj.t_max(), spec);
        }
        for (int sy = 0; sy < spec.scale; ++sy)
            for (int j = 0; j < n; ++j)
                for (int sx = 0; sx < spec.scale; ++sx) {
                    bytes.push_back(row_colors[j].r);
                    bytes.push_back(row_colors[j].g);
                    bytes.push_back(row_colors[j].b);
                }
    }
    return bytes;
}

void render_matrix(const Environment& env, const Trajectory& traj, const RenderSpec& spec,
                   const std::string& path) {
    std::vector<uint8_t> bytes = render_to_bytes(env, traj, spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render: cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("render: write failed for " + path);
}

} // namespace tcperc
