#include "tcperc/tilde.hpp"

#include <stdexcept>
#include <vector>

namespace tcperc {

namespace {

void check_rightward(const EdgeSet& open_r) {
    open_r.for_each_edge([&](int i, int j) {
        if (j < i) throw std::invalid_argument("tilde: leftward edge present in open_r");
        if (j == i + 1) throw std::invalid_argument("tilde: length-1 edge present in open_r");
    });
}

} // namespace

Trajectory run_tilde(const EdgeSet& open_r) {
    check_rightward(open_r);
    const int n = open_r.n();
    const int wpr = open_r.words_per_row();

    Trajectory traj(n);
    EdgeSet occ(n);
    for (int i = 1; i < n; ++i) {
        occ.insert(i, i + 1);
        traj.set_time(i, i + 1, 0);
    }
    EdgeSet occT = occ.transposed();

    struct Edge { int i, j; };
    int32_t t = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Edge> additions;
        for (int i = 1; i <= n; ++i) {
            const uint64_t* open_i = open_r.row(i);
            const uint64_t* occ_i = occ.row(i);
            for (int w = 0; w < wpr; ++w) {
                uint64_t cand = open_i[w] & ~occ_i[w];
                while (cand) {
                    int b = std::countr_zero(cand);
                    cand &= cand - 1;
                    int j = (w << 6) + b + 1;
                    bool fires = bitops::intersect_between(occ_i, occT.row(j), wpr, i, j) || // middle
                                 bitops::any_above(occ_i, wpr, j) ||                         // overshoot
                                 bitops::any_below(occT.row(j), wpr, i);                     // undershoot
                    if (fires) additions.push_back({i, j});
                }
            }
        }
        if (!additions.empty()) {
            grew = true;
            ++t;
            for (const Edge& e : additions) {
                occ.insert(e.i, e.j);
                occT.insert(e.j, e.i);
                traj.set_time(e.i, e.j, t);
            }
        }
    }
    return traj;
}

bool is_good_interval(const EdgeSet& open_r, int a, int b, GoodIntervalPolicy policy) {
    if (b - a < 1) throw std::invalid_argument("is_good_interval: need b - a >= 1");
    if (b - a == 1) return true;

    // Chain-or-open membership for a rightward pair (u, v), u < v.
    auto member = [&](int u, int v) { return v - u == 1 || open_r.contains(u, v); };

    for (int i = a; i < b; ++i) {
        bool covered = false;
        if (policy == GoodIntervalPolicy::kReversedReading) {
            for (int j = a; j < i && !covered; ++j)
                covered = member(j, i) && member(j, i + 1);
        }
        for (int j = i + 2; j <= b && !covered; ++j)
            covered = member(i, j) && member(i + 1, j);
        if (!covered) return false;
    }
    return true;
}

std::pair<int, int> minimal_tilde_interval(const EdgeSet& open_r, EdgeRef e) {
    if (e.j <= e.i) throw std::invalid_argument("minimal_tilde_interval: edge must be rightward");
    const int n = open_r.n();
    {
        Trajectory full = run_tilde(open_r);
        if (!full.occupied(e.i, e.j))
            throw std::invalid_argument("minimal_tilde_interval: edge not occupied by the tilde run");
    }
    for (int len = e.j - e.i + 1; len <= n; ++len) {
        for (int a = std::max(1, e.j - len + 1); a <= e.i && a + len - 1 <= n; ++a) {
            int b = a + len - 1;
            // Relabel the induced instance onto [1, len] and rerun.
            EdgeSet restricted(len);
            open_r.for_each_edge([&](int u, int v) {
                if (u >= a && v <= b) restricted.insert(u - a + 1, v - a + 1);
            });
            Trajectory traj = run_tilde(restricted);
            if (traj.occupied(e.i - a + 1, e.j - a + 1)) return {a, b};
        }
    }
    throw std::logic_error("minimal_tilde_interval: no interval found for an occupied edge");
}

} // namespace tcperc
