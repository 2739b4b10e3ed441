#ifndef TCPERC_ENVIRONMENT_HPP
#define TCPERC_ENVIRONMENT_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcperc/edge_set.hpp"

namespace tcperc {

// One percolation instance: initially occupied edges e0 and the open
// edges that may ever become occupied. Everything else is closed.
struct Environment {
    int n = 0;
    EdgeSet e0;
    EdgeSet open;
};

// Throws std::invalid_argument when e0 and open overlap or sizes differ.
inline Environment make_environment(EdgeSet e0, EdgeSet open) {
    if (e0.n() != open.n())
        throw std::invalid_argument("environment: e0 and open have different vertex counts");
    if (e0.intersects(open))
        throw std::invalid_argument("environment: e0 and open must be disjoint");
    Environment env;
    env.n = e0.n();
    env.e0 = std::move(e0);
    env.open = std::move(open);
    return env;
}

// Per-edge occupation times of one dynamics run. time(e) == 0 exactly for
// e0 edges; kNever marks open edges outside the fixpoint (the sentinel is
// strictly larger than any finite time).
class Trajectory {
public:
    static constexpr int32_t kNever = std::numeric_limits<int32_t>::max();

    Trajectory() : n_(0), t_max_(0) {}
    explicit Trajectory(int n) : n_(n), time_(static_cast<size_t>(n) * n, kNever), t_max_(0) {}

    int n() const { return n_; }
    int32_t t_max() const { return t_max_; }

    int32_t at(int i, int j) const { return time_[idx(i, j)]; }
    bool occupied(int i, int j) const { return time_[idx(i, j)] != kNever; }

    void set_time(int i, int j, int32_t t) {
        time_[idx(i, j)] = t;
        if (t > t_max_) t_max_ = t;
    }

    EdgeSet final_edge_set() const {
        EdgeSet out(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && occupied(i, j)) out.insert(i, j);
        return out;
    }

    // Occupied edges with time <= t, as an edge set.
    EdgeSet edges_at_or_before(int32_t t) const {
        EdgeSet out(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && time_[idx(i, j)] <= t) out.insert(i, j);
        return out;
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }

    int n_;
    std::vector<int32_t> time_;
    int32_t t_max_;
};

} // namespace tcperc

#endif // TCPERC_ENVIRONMENT_HPP
