#include "tcperc/predicates.hpp"

#include <stdexcept>

namespace tcperc {

bool is_saturated(const Environment& env, const EdgeSet& occupied,
                  const std::vector<int>& subset) {
    if (occupied.n() != env.n)
        throw std::invalid_argument("is_saturated: occupied set has wrong vertex count");
    const int wpr = env.open.words_per_row();
    std::vector<uint64_t> mask(wpr, 0);
    for (int v : subset) {
        if (v < 1 || v > env.n) throw std::out_of_range("is_saturated: vertex out of range");
        mask[(v - 1) >> 6] |= uint64_t{1} << ((v - 1) & 63);
    }
    for (int v : subset) {
        const uint64_t* open_v = env.open.row(v);
        const uint64_t* occ_v = occupied.row(v);
        for (int w = 0; w < wpr; ++w)
            if (open_v[w] & mask[w] & ~occ_v[w]) return false;
    }
    return true;
}

bool is_saturated(const Environment& env, const Trajectory& traj) {
    bool sat = true;
    env.open.for_each_edge([&](int i, int j) { sat = sat && traj.occupied(i, j); });
    return sat;
}

bool is_abundant(const EdgeSet& edges) {
    const int n = edges.n();
    const int wpr = edges.words_per_row();
    EdgeSet t = edges.transposed();
    for (int i = 1; i <= n; ++i) {
        const uint64_t* out_i = edges.row(i);
        for (int j = 1; j <= n; ++j)
            if (!bitops::rows_intersect(out_i, t.row(j), wpr)) return false;
    }
    return true;
}

namespace {

// Frontier-expansion BFS over rows; dist in rounds, -1 unreachable.
void bfs_from(const EdgeSet& g0, int src, std::vector<int32_t>& dist) {
    const int n = g0.n();
    const int wpr = g0.words_per_row();
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<uint64_t> visited(wpr, 0), frontier(wpr, 0), next(wpr, 0);
    auto set_bit = [](std::vector<uint64_t>& m, int v) {
        m[(v - 1) >> 6] |= uint64_t{1} << ((v - 1) & 63);
    };
    set_bit(visited, src);
    set_bit(frontier, src);
    dist[src - 1] = 0;
    int32_t level = 0;
    bool any = true;
    while (any) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < wpr; ++w) {
            uint64_t word = frontier[w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                const uint64_t* row = g0.row((w << 6) + b + 1);
                for (int w2 = 0; w2 < wpr; ++w2) next[w2] |= row[w2];
            }
        }
        any = false;
        for (int w = 0; w < wpr; ++w) {
            next[w] &= ~visited[w];
            visited[w] |= next[w];
            uint64_t word = next[w];
            if (word) any = true;
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                dist[(w << 6) + b] = level;
            }
        }
        frontier.swap(next);
    }
    (void)n;
}

} // namespace

std::optional<int> edge_length(const EdgeSet& g0, int i, int j) {
    std::vector<int32_t> dist(g0.n());
    bfs_from(g0, i, dist);
    int32_t d = dist[j - 1];
    if (d < 0) return std::nullopt;
    return static_cast<int>(d);
}

DistanceMatrix::DistanceMatrix(const EdgeSet& g0)
    : n_(g0.n()), dist_(static_cast<size_t>(g0.n()) * g0.n(), -1) {
    std::vector<int32_t> row(n_);
    for (int i = 1; i <= n_; ++i) {
        bfs_from(g0, i, row);
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<size_t>(i - 1) * n_);
    }
}

bool strongly_connected(const EdgeSet& edges, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("strongly_connected: empty subset");
    const int wpr = edges.words_per_row();
    std::vector<uint64_t> mask(wpr, 0);
    for (int v : subset) mask[(v - 1) >> 6] |= uint64_t{1} << ((v - 1) & 63);

    auto reaches_all = [&](bool forward) {
        std::vector<uint64_t> visited(wpr, 0), frontier(wpr, 0), next(wpr, 0);
        int src = subset.front();
        visited[(src - 1) >> 6] |= uint64_t{1} << ((src - 1) & 63);
        frontier = visited;
        bool any = true;
        while (any) {
            std::fill(next.begin(), next.end(), 0);
            for (int w = 0; w < wpr; ++w) {
                uint64_t word = frontier[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    int u = (w << 6) + b + 1;
                    if (forward) {
                        const uint64_t* row = edges.row(u);
                        for (int w2 = 0; w2 < wpr; ++w2) next[w2] |= row[w2] & mask[w2];
                    } else {
                        for (int v : subset)
                            if (edges.contains(v, u))
                                next[(v - 1) >> 6] |= uint64_t{1} << ((v - 1) & 63);
                    }
                }
            }
            any = false;
            for (int w = 0; w < wpr; ++w) {
                next[w] &= ~visited[w];
                visited[w] |= next[w];
                if (next[w]) any = true;
            }
            frontier.swap(next);
        }
        for (int w = 0; w < wpr; ++w)
            if (mask[w] & ~visited[w]) return false;
        return true;
    };

    return reaches_all(true) && reaches_all(false);
}

LengthSplit longest_occupied_length(const Environment& env, const Trajectory& traj,
                                    const DistanceMatrix& dist) {
    LengthSplit out;
    env.open.for_each_edge([&](int i, int j) {
        if (!traj.occupied(i, j)) return;
        int32_t len = dist.at(i, j);
        if (len < 0) return; // cannot happen for occupied edges (path necessity)
        int v = static_cast<int>(len);
        if (v > out.max_any) out.max_any = v;
        if (j > i && v > out.max_right) out.max_right = v;
        if (j < i && v > out.max_left) out.max_left = v;
    });
    return out;
}

} // namespace tcperc
