#ifndef TCPERC_HAT_BAR_HPP
#define TCPERC_HAT_BAR_HPP

#include <string>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"

namespace tcperc {

// The two dominating processes derived from an unoriented-chain instance.
// The hat process pre-occupies hat_e0_left (a closure of every leftward
// edge the original dynamics can ever use); the bar process drops those
// leftward edges but shares the same (augmented) rightward open set.
struct HatBar {
    EdgeSet hat_e0_left; // pre-occupied leftward closure
    EdgeSet hat_open_r;  // augmented rightward open set, shared by hat and bar
    Environment hat_env; // e0 = hat_e0_left + chain rightward
    Environment bar_env; // e0 = chain rightward only
};

// Requires e0 to be exactly the unoriented nearest-neighbor chain on [n].
//
// hat_e0_left: run the dynamics with every rightward edge occupied, take
// the eventually occupied leftward edges, and close under subintervals
// (all shorter leftward edges nested below an occupied one). The result
// does not depend on the rightward opens.
//
// hat_open_r: the rightward opens closed under the two nesting rules --
// from an open a->b, add w->b when the leftward edge w down to a is in
// hat_e0_left, and a->w when the leftward edge b down to w is. The rules
// are iterated to a fixpoint; the per-round trading identity needs the
// closure, not a single pass.
HatBar build_hat_bar(const Environment& env);

struct TradingReport {
    bool ok = true;
    bool base_ok = true;        // bar e0 == hat e0 minus hat_e0_left
    bool identity_ok = true;    // per-round identity up to both fixpoints
    int first_bad_round = -1;
    bool dominance_ok = true;   // E_inf inside hat fixpoint
    bool containment_ok = true; // occupied leftward edges inside hat_e0_left
    std::string detail;
};

// Steps the hat and bar processes in lockstep and checks, at every round,
// that the bar set equals the hat set minus the pre-occupied leftward
// closure; also checks hat dominance over the original run.
TradingReport verify_trading(const Environment& env);

} // namespace tcperc

#endif // TCPERC_HAT_BAR_HPP
