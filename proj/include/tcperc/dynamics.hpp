#ifndef TCPERC_DYNAMICS_HPP
#define TCPERC_DYNAMICS_HPP

#include <cstdint>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"

namespace tcperc {

// One full parallel round: occupied together with every open edge i->j
// that has a witness i->k->j in `occupied`. Throws on dimension mismatch
// or when `occupied` violates e0 <= occupied <= e0 |_| open.
EdgeSet step(const Environment& env, const EdgeSet& occupied);

// Runs the parallel dynamics to fixpoint. time(e) is the first round at
// which e appears; open edges outside the fixpoint get Trajectory::kNever.
// Worklist propagation, O(n^3 / 64) words total.
Trajectory run(const Environment& env);

enum class SlowedOrder {
    kSeeded, // uniform over the current candidate set, SplitMix64(order_seed)
    kLex,    // always the lexicographically smallest candidate
};

// Slowed-down dynamics: occupies exactly one occupiable open edge per
// tick until none remains. Times in the returned trajectory are tick
// numbers (1, 2, ...), not parallel rounds. The final set equals run()'s
// for every order.
Trajectory run_slowed(const Environment& env, uint64_t order_seed,
                      SlowedOrder order = SlowedOrder::kSeeded);

// K_d-completion dynamics on unoriented instances: per round, occupies
// every open edge u<->v that completes a K_d with d-2 occupied-clique
// common neighbors. Requires symmetric e0/open and d >= 3; d = 3 is
// transitivity on the symmetrized graph.
Trajectory run_kd_completion(const Environment& env, int d);

} // namespace tcperc

#endif // TCPERC_DYNAMICS_HPP
