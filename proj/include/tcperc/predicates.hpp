#ifndef TCPERC_PREDICATES_HPP
#define TCPERC_PREDICATES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"

namespace tcperc {

// True iff every open edge with both endpoints in `subset` is occupied.
// Throws on out-of-range vertices.
bool is_saturated(const Environment& env, const EdgeSet& occupied,
                  const std::vector<int>& subset);

// Full-vertex-set saturation straight from a trajectory.
bool is_saturated(const Environment& env, const Trajectory& traj);

// Abundance: for every ordered pair (i, j) some k has i->k->j in `edges`.
// Abundance of E_infinity implies saturation.
bool is_abundant(const EdgeSet& edges);

// BFS distance from i to j along g0; nullopt when unreachable.
std::optional<int> edge_length(const EdgeSet& g0, int i, int j);

// All-pairs BFS distances over a fixed g0, computed once and shared by
// every trial of an experiment. at(i,j) < 0 means unreachable.
class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    explicit DistanceMatrix(const EdgeSet& g0);

    int n() const { return n_; }
    int32_t at(int i, int j) const { return dist_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }

private:
    int n_;
    std::vector<int32_t> dist_;
};

// Strong connectivity of the induced directed subgraph on `subset`.
bool strongly_connected(const EdgeSet& edges, const std::vector<int>& subset);

struct LengthSplit {
    int max_right = 0; // over occupied non-e0 edges with j > i
    int max_left = 0;  // over occupied non-e0 edges with j < i
    int max_any = 0;
};

// Maximum g0-length over occupied non-e0 edges, split by orientation sign
// for vertex sets [n]. Zero when nothing beyond e0 is occupied.
LengthSplit longest_occupied_length(const Environment& env, const Trajectory& traj,
                                    const DistanceMatrix& dist);

} // namespace tcperc

#endif // TCPERC_PREDICATES_HPP
