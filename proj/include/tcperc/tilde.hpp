#ifndef TCPERC_TILDE_HPP
#define TCPERC_TILDE_HPP

#include <utility>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"
#include "tcperc/oracles.hpp"

namespace tcperc {

// Rightward-only auxiliary dynamics: starting from the oriented chain, an
// open edge i->j joins when some k gives a middle witness (i<k<j, both
// legs occupied), an overshoot witness (i->k occupied, k>j) or an
// undershoot witness (k->j occupied, k<i). Throws when open_r contains a
// leftward or length-1 edge.
Trajectory run_tilde(const EdgeSet& open_r);

enum class GoodIntervalPolicy {
    // "i<-j" drawn leftward denotes the rightward pair (j,i) of the
    // chain-or-open edge set (the default reading).
    kReversedReading,
    // Leftward-drawn members are never satisfiable (strict orientation);
    // kept for comparison with the default.
    kStrictRightward,
};

// Good interval: |I| = 2, or every adjacent pair {i,i+1} in I is covered
// by some j in I with both covering edges in the chain-or-open set.
bool is_good_interval(const EdgeSet& open_r, int a, int b,
                      GoodIntervalPolicy policy = GoodIntervalPolicy::kReversedReading);

// Minimum-cardinality interval whose induced tilde run occupies e;
// smallest left endpoint among ties. Throws when e is not occupied by
// the unrestricted tilde run.
std::pair<int, int> minimal_tilde_interval(const EdgeSet& open_r, EdgeRef e);

} // namespace tcperc

#endif // TCPERC_TILDE_HPP
