#include "tcperc/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcperc/dynamics.hpp"
#include "tcperc/predicates.hpp"

namespace tcperc {

namespace {

Environment induced_environment(const Environment& env, const std::vector<int>& subset) {
    const int n = env.n;
    Environment sub;
    sub.n = n;
    sub.e0 = EdgeSet(n);
    sub.open = EdgeSet(n);
    for (int u : subset)
        for (int v : subset) {
            if (u == v) continue;
            if (env.e0.contains(u, v)) sub.e0.insert(u, v);
            if (env.open.contains(u, v)) sub.open.insert(u, v);
        }
    return sub;
}

bool induced_occupies(const Environment& env, const std::vector<int>& subset, EdgeRef e) {
    Environment sub = induced_environment(env, subset);
    Trajectory traj = run(sub);
    return traj.occupied(e.i, e.j);
}

// Lexicographically ordered k-combinations of 1..n. Returns false when
// exhausted.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int idx = k - 1;
    while (idx >= 0 && comb[idx] == n - (k - 1 - idx)) --idx;
    if (idx < 0) return false;
    ++comb[idx];
    for (int t = idx + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
    return true;
}

} // namespace

WitnessSet minimal_witness(const Environment& env, EdgeRef e, int n_cap) {
    if (env.n > n_cap)
        throw std::invalid_argument("minimal_witness: n exceeds the exhaustive-search cap");
    {
        Trajectory traj = run(env);
        if (!traj.occupied(e.i, e.j))
            throw std::invalid_argument("minimal_witness: edge is not eventually occupied");
    }
    for (int k = 2; k <= env.n; ++k) {
        std::vector<int> comb(k);
        for (int t = 0; t < k; ++t) comb[t] = t + 1;
        do {
            if (!std::binary_search(comb.begin(), comb.end(), e.i)) continue;
            if (!std::binary_search(comb.begin(), comb.end(), e.j)) continue;
            if (induced_occupies(env, comb, e)) {
                WitnessSet w;
                w.target = e;
                w.vertices = comb;
                w.cardinality = k;
                return w;
            }
        } while (next_combination(comb, env.n));
    }
    throw std::logic_error("minimal_witness: no witness found for an occupied edge");
}

std::vector<Horn> horns_of(const Environment& env, const std::vector<int>& K, int v) {
    std::vector<Horn> horns;
    auto in_union = [&](int a, int b) { return env.e0.contains(a, b) || env.open.contains(a, b); };
    for (int x : K) {
        if (x == v) continue;
        for (int y : K) {
            if (y == v || y == x) continue;
            if (env.e0.contains(x, v) && env.e0.contains(v, y) && env.open.contains(x, y))
                horns.push_back({v, x, y, HornVariant::kThrough});
            if (env.e0.contains(v, x) && in_union(x, y) && env.open.contains(v, y))
                horns.push_back({v, x, y, HornVariant::kOut});
            if (env.e0.contains(x, v) && in_union(y, x) && env.open.contains(y, v))
                horns.push_back({v, x, y, HornVariant::kIn});
        }
    }
    return horns;
}

AlReport check_al_property(const Environment& env, int n_cap) {
    AlReport report;
    Trajectory traj = run(env);
    DistanceMatrix dist(env.e0);

    std::vector<std::pair<EdgeRef, int>> occupied; // edge, length
    int longest = 0;
    for (int i = 1; i <= env.n; ++i)
        for (int j = 1; j <= env.n; ++j) {
            if (i == j || !traj.occupied(i, j)) continue;
            int len = dist.at(i, j);
            occupied.push_back({{i, j}, len});
            longest = std::max(longest, len);
        }
    report.longest_length = longest;

    std::vector<int> witness_sizes(occupied.size());
    for (size_t idx = 0; idx < occupied.size(); ++idx)
        witness_sizes[idx] = minimal_witness(env, occupied[idx].first, n_cap).cardinality;

    for (int k = 1; k <= longest; ++k) {
        AlScaleEntry entry;
        entry.k = k;
        for (size_t idx = 0; idx < occupied.size(); ++idx) {
            int size = witness_sizes[idx];
            if (size >= k + 1 && size <= 2 * k) {
                entry.found = true;
                entry.edge = occupied[idx].first;
                entry.witness_size = size;
                break;
            }
        }
        if (!entry.found) report.ok = false;
        report.scales.push_back(entry);
    }
    return report;
}

Environment catalan_environment(int ell) {
    if (ell < 1) throw std::invalid_argument("catalan_environment: ell must be >= 1");
    const int n = ell + 1;
    EdgeSet e0(n), open(n);
    for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) open.insert(i, j);
    return make_environment(std::move(e0), std::move(open));
}

namespace {

// Open edges of the ell-instance indexed 0..m-1; masks fit in 64 bits for
// ell <= 11 (m = ell(ell-1)/2 <= 55).
std::vector<EdgeRef> catalan_open_edges(int ell) {
    std::vector<EdgeRef> edges;
    for (int i = 1; i <= ell + 1; ++i)
        for (int j = i + 2; j <= ell + 1; ++j) edges.push_back({i, j});
    return edges;
}

int catalan_edge_index(const std::vector<EdgeRef>& edges, EdgeRef e) {
    for (size_t t = 0; t < edges.size(); ++t)
        if (edges[t] == e) return static_cast<int>(t);
    throw std::logic_error("catalan edge not found");
}

bool mask_occupies(int ell, const std::vector<EdgeRef>& edges, uint64_t mask, EdgeRef target) {
    const int n = ell + 1;
    EdgeSet e0(n), open(n);
    for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
    for (size_t t = 0; t < edges.size(); ++t)
        if (mask & (uint64_t{1} << t)) open.insert(edges[t].i, edges[t].j);
    Environment env{n, std::move(e0), std::move(open)};
    return run(env).occupied(target.i, target.j);
}

void bracketings(int i, int j, std::vector<uint64_t>& out,
                 const std::vector<std::vector<int>>& edge_index) {
    if (j - i == 1) {
        out.push_back(0);
        return;
    }
    for (int k = i + 1; k < j; ++k) {
        std::vector<uint64_t> left, right;
        bracketings(i, k, left, edge_index);
        bracketings(k, j, right, edge_index);
        uint64_t extra = 0;
        if (k - i >= 2) extra |= uint64_t{1} << edge_index[i][k];
        if (j - k >= 2) extra |= uint64_t{1} << edge_index[k][j];
        for (uint64_t a : left)
            for (uint64_t b : right) out.push_back(a | b | extra);
    }
}

} // namespace

std::vector<uint64_t> catalan_bracketing_masks(int ell) {
    if (ell < 1 || ell > 10)
        throw std::invalid_argument("catalan_bracketing_masks: ell must be in [1,10]");
    std::vector<EdgeRef> edges = catalan_open_edges(ell);
    std::vector<std::vector<int>> edge_index(ell + 2, std::vector<int>(ell + 2, -1));
    for (size_t t = 0; t < edges.size(); ++t)
        edge_index[edges[t].i][edges[t].j] = static_cast<int>(t);

    std::vector<uint64_t> masks;
    bracketings(1, ell + 1, masks, edge_index);
    uint64_t root = uint64_t{1} << edge_index[1][ell + 1];
    for (uint64_t& m : masks) m |= root;
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

CatalanSetsReport catalan_minimal_sets(int ell) {
    if (ell < 2 || ell > 10)
        throw std::invalid_argument("catalan_minimal_sets: ell must be in [2,10]");
    CatalanSetsReport report;
    report.ell = ell;

    const std::vector<EdgeRef> edges = catalan_open_edges(ell);
    const EdgeRef target{1, ell + 1};
    const int target_idx = catalan_edge_index(edges, target);
    const uint64_t target_bit = uint64_t{1} << target_idx;

    auto record = [&](uint64_t mask) {
        int size = std::popcount(mask);
        ++report.size_histogram[size];
        ++report.count;
        if (size != ell - 1) report.all_expected_size = false;
    };

    auto is_minimal = [&](uint64_t mask) {
        uint64_t rest = mask;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (bit == target_bit) continue; // target must stay in A
            if (mask_occupies(ell, edges, mask & ~bit, target)) return false;
        }
        return true;
    };

    if (ell <= 6) {
        report.method = "subset-enumeration";
        const int m = static_cast<int>(edges.size());
        for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
            if (!(mask & target_bit)) continue;
            if (!mask_occupies(ell, edges, mask, target)) continue;
            if (is_minimal(mask)) record(mask);
        }
    } else {
        report.method = "derivation-trees";
        for (uint64_t mask : catalan_bracketing_masks(ell)) {
            if (!mask_occupies(ell, edges, mask, target))
                throw std::logic_error("derivation-tree set fails to occupy the target");
            if (!is_minimal(mask))
                throw std::logic_error("derivation-tree set is not inclusion-minimal");
            record(mask);
        }
    }
    return report;
}

EdgeSet oriented_site_reachability(const Environment& env) {
    const int n = env.n;
    // Catalan setting only: the base must be the oriented chain and every
    // open edge rightward.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool chain = (j == i + 1);
            if (env.e0.contains(i, j) != chain)
                throw std::invalid_argument("oriented_site_reachability: base is not the oriented chain");
            if (j < i && env.open.contains(i, j))
                throw std::invalid_argument("oriented_site_reachability: leftward open edge present");
        }

    EdgeSet reach(n);
    for (int span = 1; span < n; ++span)
        for (int i = 1; i + span <= n; ++i) {
            int j = i + span;
            bool present = env.e0.contains(i, j) || env.open.contains(i, j);
            if (!present) continue;
            bool connected = span == 1 ||
                             (span >= 2 && reach.contains(i, j - 1)) ||
                             (span >= 2 && reach.contains(i + 1, j));
            if (connected) reach.insert(i, j);
        }
    return reach;
}

bool oriented_site_path(const Environment& env, EdgeRef e) {
    if (e.j <= e.i) throw std::invalid_argument("oriented_site_path: edge must be rightward");
    return oriented_site_reachability(env).contains(e.i, e.j);
}

} // namespace tcperc
