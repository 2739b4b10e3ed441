#ifndef TCPERC_ORACLES_HPP
#define TCPERC_ORACLES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"

namespace tcperc {

struct EdgeRef {
    int i = 0, j = 0;
    bool operator==(const EdgeRef& o) const { return i == o.i && j == o.j; }
};

// Minimum-cardinality vertex subset whose induced sub-environment makes
// the target edge occupied; lexicographically smallest among minima.
struct WitnessSet {
    EdgeRef target;
    std::vector<int> vertices; // sorted ascending
    int cardinality = 0;
};

inline constexpr int kWitnessCap = 16;

// Exhaustive search over vertex subsets (smallest cardinality first, then
// lexicographic). Throws when e is not eventually occupied or n > n_cap;
// refuses rather than approximates above the cap.
WitnessSet minimal_witness(const Environment& env, EdgeRef e, int n_cap = kWitnessCap);

// The three local configurations certifying that v participates in the
// spread via open edges; y is the tip.
enum class HornVariant { kThrough, kOut, kIn };

struct Horn {
    int v = 0;
    int x = 0;
    int y = 0; // tip
    HornVariant variant = HornVariant::kThrough;
};

// All horns for v with x, y drawn from K.
std::vector<Horn> horns_of(const Environment& env, const std::vector<int>& K, int v);

struct AlScaleEntry {
    int k = 0;
    EdgeRef edge;         // an occupied edge with witness cardinality in [k+1, 2k]
    int witness_size = 0; // 0 when missing
    bool found = false;
};

struct AlReport {
    int longest_length = 0; // length of the longest occupied edge
    std::vector<AlScaleEntry> scales;
    bool ok = true;
};

// Scale coverage: for the longest occupied edge length L and every
// k in [1, L], some occupied edge has witness cardinality in [k+1, 2k].
AlReport check_al_property(const Environment& env, int n_cap = kWitnessCap);

// The all-rightward-open instance on ell+1 vertices targeted at 1->(ell+1).
Environment catalan_environment(int ell);

struct CatalanSetsReport {
    int ell = 0;
    uint64_t count = 0;
    std::map<int, uint64_t> size_histogram; // |A| -> number of minimal sets
    bool all_expected_size = true;          // every |A| == ell - 1
    std::string method;                     // "subset-enumeration" or "derivation-trees"
};

// Counts inclusion-minimal open-edge subsets (including the target) that
// occupy 1->(ell+1). Exhaustive subset enumeration for ell <= 6, DFS over
// derivation trees with per-set dynamic verification above.
CatalanSetsReport catalan_minimal_sets(int ell);

// Independent second route: enumerates derivation trees directly and
// returns the distinct open-edge sets they induce (no dynamics involved).
std::vector<uint64_t> catalan_bracketing_masks(int ell);

// Site (i,j), i<j, is reachable when it is open-or-initial and a chain of
// such sites of the two shrinking kinds connects it to the diagonal.
// Requires the Catalan setting (oriented chain e0, rightward-only opens).
EdgeSet oriented_site_reachability(const Environment& env);

bool oriented_site_path(const Environment& env, EdgeRef e);

} // namespace tcperc

#endif // TCPERC_ORACLES_HPP
