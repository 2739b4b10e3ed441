#ifndef TCPERC_FAMILIES_HPP
#define TCPERC_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcperc/edge_set.hpp"

namespace tcperc {

enum class FamilyKind {
    kLinearUnoriented, // 1 <-> 2 <-> ... <-> n
    kLinearOriented,   // 1 -> 2 -> ... -> n
    kHamming,          // [n]^d, adjacent iff one coordinate differs
    kHypercube,        // {0,1}^dim
    kErInitial,        // unoriented Erdos-Renyi e0 with density p_initial
    kRPairs,           // strongly connected pairs + alternating inter-pair edges
    kChainLeftRange,   // oriented chain + leftward edges of range r
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::kLinearUnoriented;
    int n = 0;                // all kinds; side length for kHamming
    int d = 0;                // kHamming exponent
    int dim = 0;              // kHypercube dimension
    double p_initial = 0.0;   // kErInitial
    uint64_t family_seed = 0; // kErInitial
    int r = 0;                // kChainLeftRange
};

// Number of vertices the generated edge set lives on (n^d for Hamming,
// 2^dim for the hypercube, n otherwise).
int family_vertex_count(const FamilySpec& spec);

// Builds the initially occupied edge set. Deterministic given the spec.
// Throws std::invalid_argument on bad parameter combinations.
EdgeSet make_family(const FamilySpec& spec);

// Whether the LEFT_RIGHT open model is meaningful for this family
// (vertex set [n] with a linear order; coordinate families are not).
bool allows_left_right(const FamilySpec& spec);

// Maximum number of distinct neighbors over all vertices, orientation
// ignored (coincides with max in/out degree on unoriented inputs).
int max_degree(const EdgeSet& e0);

struct RUnorientedReport {
    bool ok = false;
    std::string first_violation; // empty when ok
};

// Checks the block-contraction structure: blocks phi^-1(y) of size <= R,
// each strongly connected, and the graph of block pairs joined by edges
// in both directions is connected (a spanning tree of such pairs is the
// witness tree). phi maps each vertex 1..n to a block id.
RUnorientedReport validate_r_unoriented(const EdgeSet& e0, const std::vector<int>& phi, int R);

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

} // namespace tcperc

#endif // TCPERC_FAMILIES_HPP
