#include "tcperc/dynamics.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "tcperc/rng.hpp"

namespace tcperc {

namespace {

struct Edge {
    int i, j;
};

// Shared propagation state: occupied and open matrices plus transposes,
// and the per-round pending set that keeps parallel rounds clean.
struct Propagator {
    const Environment& env;
    int n, wpr;
    EdgeSet occ, occT, openT, pend, pendT;

    explicit Propagator(const Environment& e)
        : env(e), n(e.n), wpr(e.e0.words_per_row()),
          occ(e.e0), occT(e.e0.transposed()), openT(e.open.transposed()),
          pend(e.n), pendT(e.n) {}

    // Candidates unlocked by newly occupied edge (i,k), excluding edges
    // already occupied or discovered this round. fn(i,j) per candidate.
    template <typename Fn>
    void discover(int i, int k, Fn&& fn) {
        // First leg: i->k->j with k->j occupied and i->j open.
        {
            const uint64_t* open_i = env.open.row(i);
            const uint64_t* occ_k = occ.row(k);
            const uint64_t* occ_i = occ.row(i);
            const uint64_t* pend_i = pend.row(i);
            for (int w = 0; w < wpr; ++w) {
                uint64_t cand = open_i[w] & occ_k[w] & ~occ_i[w] & ~pend_i[w];
                while (cand) {
                    int b = std::countr_zero(cand);
                    cand &= cand - 1;
                    fn(i, (w << 6) + b + 1);
                }
            }
        }
        // Second leg: h->i->k with h->i occupied and h->k open.
        {
            const uint64_t* occT_i = occT.row(i);
            const uint64_t* openT_k = openT.row(k);
            const uint64_t* occT_k = occT.row(k);
            const uint64_t* pendT_k = pendT.row(k);
            for (int w = 0; w < wpr; ++w) {
                uint64_t cand = occT_i[w] & openT_k[w] & ~occT_k[w] & ~pendT_k[w];
                while (cand) {
                    int b = std::countr_zero(cand);
                    cand &= cand - 1;
                    fn((w << 6) + b + 1, k);
                }
            }
        }
    }

    void mark_pending(int i, int j) {
        pend.insert(i, j);
        pendT.insert(j, i);
    }

    void commit(int i, int j) {
        occ.insert(i, j);
        occT.insert(j, i);
        pend.erase(i, j);
        pendT.erase(j, i);
    }
};

void check_step_pre(const Environment& env, const EdgeSet& occupied) {
    if (occupied.n() != env.n)
        throw std::invalid_argument("step: occupied set has wrong vertex count");
    if (!env.e0.is_subset_of(occupied))
        throw std::invalid_argument("step: occupied must contain e0");
    EdgeSet allowed = set_union(env.e0, env.open);
    if (!occupied.is_subset_of(allowed))
        throw std::invalid_argument("step: occupied must lie within e0 and open edges");
}

} // namespace

EdgeSet step(const Environment& env, const EdgeSet& occupied) {
    check_step_pre(env, occupied);
    const int wpr = occupied.words_per_row();
    EdgeSet occT = occupied.transposed();
    EdgeSet out = occupied;
    for (int i = 1; i <= env.n; ++i) {
        const uint64_t* open_i = env.open.row(i);
        const uint64_t* occ_i = occupied.row(i);
        for (int w = 0; w < wpr; ++w) {
            uint64_t cand = open_i[w] & ~occ_i[w];
            while (cand) {
                int b = std::countr_zero(cand);
                cand &= cand - 1;
                int j = (w << 6) + b + 1;
                if (bitops::rows_intersect(occ_i, occT.row(j), wpr)) out.insert(i, j);
            }
        }
    }
    return out;
}

Trajectory run(const Environment& env) {
    Trajectory traj(env.n);
    Propagator prop(env);

    std::vector<Edge> frontier;
    env.e0.for_each_edge([&](int i, int j) {
        traj.set_time(i, j, 0);
        frontier.push_back({i, j});
    });

    std::vector<Edge> next;
    int32_t t = 0;
    while (!frontier.empty()) {
        next.clear();
        for (const Edge& e : frontier) {
            prop.discover(e.i, e.j, [&](int i, int j) {
                prop.mark_pending(i, j);
                next.push_back({i, j});
            });
        }
        ++t;
        for (const Edge& e : next) {
            prop.commit(e.i, e.j);
            traj.set_time(e.i, e.j, t);
        }
        frontier.swap(next);
    }
    return traj;
}

Trajectory run_slowed(const Environment& env, uint64_t order_seed, SlowedOrder order) {
    Trajectory traj(env.n);
    Propagator prop(env);

    env.e0.for_each_edge([&](int i, int j) { traj.set_time(i, j, 0); });

    // Candidate pool: open edges with a current witness. pend doubles as
    // the membership bitset. Witnesses never disappear, so candidates
    // only ever get consumed.
    std::vector<Edge> candidates;
    env.e0.for_each_edge([&](int i, int j) {
        prop.discover(i, j, [&](int a, int b) {
            prop.mark_pending(a, b);
            candidates.push_back({a, b});
        });
    });

    SplitMix64 rng(order_seed);
    int32_t tick = 0;
    while (!candidates.empty()) {
        size_t pick = 0;
        if (order == SlowedOrder::kSeeded) {
            pick = static_cast<size_t>(rng.next() % candidates.size());
        } else {
            for (size_t c = 1; c < candidates.size(); ++c) {
                const Edge& best = candidates[pick];
                const Edge& cur = candidates[c];
                if (cur.i < best.i || (cur.i == best.i && cur.j < best.j)) pick = c;
            }
        }
        Edge e = candidates[pick];
        candidates[pick] = candidates.back();
        candidates.pop_back();

        prop.commit(e.i, e.j);
        traj.set_time(e.i, e.j, ++tick);

        prop.discover(e.i, e.j, [&](int a, int b) {
            prop.mark_pending(a, b);
            candidates.push_back({a, b});
        });
    }
    return traj;
}

namespace {

// True when the occupied graph restricted to `cand` contains a clique of
// size r. Bitset branch-and-bound; r = d - 2 stays tiny in practice.
bool has_clique(const EdgeSet& occ, std::vector<uint64_t>& cand, int r, int wpr,
                std::vector<std::vector<uint64_t>>& scratch, int depth) {
    if (r == 0) return true;
    for (int w = 0; w < wpr; ++w) {
        uint64_t word = cand[w];
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            int v = (w << 6) + b + 1;
            if (r == 1) return true;
            std::vector<uint64_t>& nextc = scratch[depth];
            const uint64_t* nv = occ.row(v);
            // Restrict to neighbors of v above v (canonical ascending order).
            for (int w2 = 0; w2 < wpr; ++w2) nextc[w2] = cand[w2] & nv[w2];
            nextc[w] &= ~((uint64_t{1} << (b + 1)) - 1);
            for (int w2 = 0; w2 < w; ++w2) nextc[w2] = 0;
            if (has_clique(occ, nextc, r - 1, wpr, scratch, depth + 1)) return true;
        }
    }
    return false;
}

} // namespace

Trajectory run_kd_completion(const Environment& env, int d) {
    if (d < 3) throw std::invalid_argument("run_kd_completion: d must be >= 3");
    if (!env.e0.is_symmetric() || !env.open.is_symmetric())
        throw std::invalid_argument("run_kd_completion: e0 and open must be symmetric");

    const int n = env.n;
    const int wpr = env.e0.words_per_row();
    Trajectory traj(n);
    EdgeSet occ = env.e0;
    env.e0.for_each_edge([&](int i, int j) { traj.set_time(i, j, 0); });

    std::vector<uint64_t> common(wpr);
    std::vector<std::vector<uint64_t>> scratch(d, std::vector<uint64_t>(wpr));

    int32_t t = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Edge> additions;
        for (int u = 1; u <= n; ++u) {
            const uint64_t* open_u = env.open.row(u);
            const uint64_t* occ_u = occ.row(u);
            for (int w = 0; w < wpr; ++w) {
                uint64_t cand = open_u[w] & ~occ_u[w];
                // Unoriented edges: handle each pair once via u < v.
                while (cand) {
                    int b = std::countr_zero(cand);
                    cand &= cand - 1;
                    int v = (w << 6) + b + 1;
                    if (v <= u) continue;
                    const uint64_t* occ_v = occ.row(v);
                    for (int w2 = 0; w2 < wpr; ++w2) common[w2] = occ_u[w2] & occ_v[w2];
                    if (has_clique(occ, common, d - 2, wpr, scratch, 0))
                        additions.push_back({u, v});
                }
            }
        }
        if (!additions.empty()) {
            grew = true;
            ++t;
            for (const Edge& e : additions) {
                occ.insert(e.i, e.j);
                occ.insert(e.j, e.i);
                traj.set_time(e.i, e.j, t);
                traj.set_time(e.j, e.i, t);
            }
        }
    }
    return traj;
}

} // namespace tcperc
