#include "tcperc/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tcperc/predicates.hpp"
#include "tcperc/rng.hpp"

namespace tcperc {

namespace {

int checked_pow(int base, int exp, const char* what) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > 1 << 20) throw std::invalid_argument(std::string(what) + ": vertex count too large");
    }
    return static_cast<int>(v);
}

} // namespace

int family_vertex_count(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::kHamming:
            if (spec.n < 1 || spec.d < 1) throw std::invalid_argument("hamming: need n >= 1 and d >= 1");
            return checked_pow(spec.n, spec.d, "hamming");
        case FamilyKind::kHypercube:
            if (spec.dim < 1) throw std::invalid_argument("hypercube: need dim >= 1");
            return checked_pow(2, spec.dim, "hypercube");
        default:
            if (spec.n < 1) throw std::invalid_argument("family: need n >= 1");
            return spec.n;
    }
}

EdgeSet make_family(const FamilySpec& spec) {
    const int n = family_vertex_count(spec);
    EdgeSet e0(n);
    switch (spec.kind) {
        case FamilyKind::kLinearUnoriented:
            for (int i = 1; i < n; ++i) {
                e0.insert(i, i + 1);
                e0.insert(i + 1, i);
            }
            break;
        case FamilyKind::kLinearOriented:
            for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
            break;
        case FamilyKind::kHamming: {
            // Vertex v-1 written in base spec.n, row-major over coordinates.
            for (int v = 0; v < n; ++v) {
                int stride = 1;
                for (int c = 0; c < spec.d; ++c) {
                    int digit = (v / stride) % spec.n;
                    for (int other = 0; other < spec.n; ++other) {
                        if (other == digit) continue;
                        int u = v + (other - digit) * stride;
                        e0.insert(v + 1, u + 1);
                    }
                    stride *= spec.n;
                }
            }
            break;
        }
        case FamilyKind::kHypercube:
            for (int v = 0; v < n; ++v)
                for (int b = 0; b < spec.dim; ++b) e0.insert(v + 1, (v ^ (1 << b)) + 1);
            break;
        case FamilyKind::kErInitial: {
            if (spec.p_initial < 0.0 || spec.p_initial > 1.0)
                throw std::invalid_argument("er-initial: p_initial must be in [0,1]");
            // One uniform per unoriented pair, row-major over i < j.
            SplitMix64 rng(derive_seed(spec.family_seed, stream_tag::kFamily));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (rng.uniform01() < spec.p_initial) {
                        e0.insert(i, j);
                        e0.insert(j, i);
                    }
            break;
        }
        case FamilyKind::kRPairs: {
            if (n % 2 != 0) throw std::invalid_argument("r-pairs: vertex count must be even");
            const int m = n / 2;
            for (int k = 1; k <= m; ++k) {
                e0.insert(2 * k - 1, 2 * k);
                e0.insert(2 * k, 2 * k - 1);
            }
            // Odd chain runs forward, even chain runs backward.
            for (int k = 1; k < m; ++k) {
                e0.insert(2 * k - 1, 2 * k + 1);
                e0.insert(2 * k + 2, 2 * k);
            }
            break;
        }
        case FamilyKind::kChainLeftRange: {
            if (spec.r < 1 || spec.r > n - 1)
                throw std::invalid_argument("chain-left-range: need 1 <= r <= n-1");
            if ((n - 1) % spec.r != 0)
                throw std::invalid_argument("chain-left-range: r must divide n-1");
            for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
            for (int a = 1; a + spec.r <= n; a += spec.r) e0.insert(a + spec.r, a);
            break;
        }
    }
    return e0;
}

bool allows_left_right(const FamilySpec& spec) {
    return spec.kind != FamilyKind::kHamming && spec.kind != FamilyKind::kHypercube;
}

int max_degree(const EdgeSet& e0) {
    const int wpr = e0.words_per_row();
    EdgeSet t = e0.transposed();
    int best = 0;
    for (int v = 1; v <= e0.n(); ++v) {
        const uint64_t* out = e0.row(v);
        const uint64_t* in = t.row(v);
        int deg = 0;
        for (int w = 0; w < wpr; ++w) deg += std::popcount(out[w] | in[w]);
        best = std::max(best, deg);
    }
    return best;
}

RUnorientedReport validate_r_unoriented(const EdgeSet& e0, const std::vector<int>& phi, int R) {
    RUnorientedReport report;
    const int n = e0.n();
    if (static_cast<int>(phi.size()) != n) {
        report.first_violation = "phi must assign a block to every vertex";
        return report;
    }

    std::map<int, std::vector<int>> blocks;
    for (int v = 1; v <= n; ++v) blocks[phi[v - 1]].push_back(v);

    for (const auto& [id, members] : blocks) {
        if (static_cast<int>(members.size()) > R) {
            report.first_violation =
                "block " + std::to_string(id) + " has size " + std::to_string(members.size()) +
                " > R = " + std::to_string(R);
            return report;
        }
    }
    for (const auto& [id, members] : blocks) {
        // Strong connectivity within the induced block.
        EdgeSet induced(n);
        for (int u : members)
            for (int v : members)
                if (u != v && e0.contains(u, v)) induced.insert(u, v);
        if (!strongly_connected(induced, members)) {
            report.first_violation = "block " + std::to_string(id) + " is not strongly connected";
            return report;
        }
    }

    // Block pairs joined by edges in both directions; a tree on blocks
    // exists iff this graph is connected.
    std::vector<int> ids;
    for (const auto& [id, members] : blocks) ids.push_back(id);
    const int B = static_cast<int>(ids.size());
    auto index_of = [&](int id) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<std::vector<bool>> fwd(B, std::vector<bool>(B, false));
    e0.for_each_edge([&](int u, int v) {
        int bu = index_of(phi[u - 1]);
        int bv = index_of(phi[v - 1]);
        if (bu != bv) fwd[bu][bv] = true;
    });
    std::vector<int> comp(B, -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        for (int c = 0; c < B; ++c)
            if (comp[c] < 0 && fwd[b][c] && fwd[c][b]) {
                comp[c] = 0;
                stack.push_back(c);
            }
    }
    for (int b = 0; b < B; ++b)
        if (comp[b] < 0) {
            report.first_violation =
                "blocks are not connected by bidirectional inter-block edges (no spanning tree)";
            return report;
        }

    report.ok = true;
    return report;
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kLinearUnoriented: return "linear-unoriented";
        case FamilyKind::kLinearOriented: return "linear-oriented";
        case FamilyKind::kHamming: return "hamming";
        case FamilyKind::kHypercube: return "hypercube";
        case FamilyKind::kErInitial: return "er-initial";
        case FamilyKind::kRPairs: return "r-pairs";
        case FamilyKind::kChainLeftRange: return "chain-left-range";
    }
    throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "linear-unoriented") return FamilyKind::kLinearUnoriented;
    if (name == "linear-oriented") return FamilyKind::kLinearOriented;
    if (name == "hamming") return FamilyKind::kHamming;
    if (name == "hypercube") return FamilyKind::kHypercube;
    if (name == "er-initial") return FamilyKind::kErInitial;
    if (name == "r-pairs") return FamilyKind::kRPairs;
    if (name == "chain-left-range") return FamilyKind::kChainLeftRange;
    throw std::invalid_argument("unknown family kind: " + name);
}

} // namespace tcperc
