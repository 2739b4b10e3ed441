#include "tcperc/hat_bar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tcperc/dynamics.hpp"

namespace tcperc {

namespace {

void check_chain_base(const Environment& env) {
    const int n = env.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool chain = (j == i + 1) || (j == i - 1);
            if (env.e0.contains(i, j) != chain)
                throw std::invalid_argument("build_hat_bar: e0 must be the unoriented chain");
        }
}

} // namespace

HatBar build_hat_bar(const Environment& env) {
    check_chain_base(env);
    const int n = env.n;

    // Leftward spread with all rightward edges present: only the leftward
    // opens remain open.
    EdgeSet aux_e0(n), aux_open(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) aux_e0.insert(i, j);
    for (int i = 2; i <= n; ++i) aux_e0.insert(i, i - 1);
    env.open.for_each_edge([&](int i, int j) {
        if (j < i) aux_open.insert(i, j);
    });
    Environment aux{n, std::move(aux_e0), std::move(aux_open)};
    Trajectory aux_traj = run(aux);

    // Occupied leftward edges as intervals [target, source], then the
    // subinterval closure: min_left[v] = least left endpoint over
    // occupied intervals whose right endpoint is >= v.
    std::vector<int> min_left(n + 2, n + 1);
    for (int s = 2; s <= n; ++s)
        for (int t = 1; t < s; ++t)
            if (aux_traj.occupied(s, t)) min_left[s] = std::min(min_left[s], t);
    for (int v = n - 1; v >= 1; --v) min_left[v] = std::min(min_left[v], min_left[v + 1]);

    EdgeSet hat_e0_left(n);
    for (int v = 2; v <= n; ++v)
        for (int u = min_left[v]; u < v; ++u) hat_e0_left.insert(v, u);

    // Rightward opens closed under the two nesting rules.
    EdgeSet hat_open(n);
    std::vector<std::pair<int, int>> queue;
    env.open.for_each_edge([&](int i, int j) {
        if (j > i) {
            hat_open.insert(i, j);
            queue.push_back({i, j});
        }
    });
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (int w = a + 1; w < b; ++w) {
            if (hat_e0_left.contains(w, a) && b - w >= 2 && !hat_open.contains(w, b)) {
                hat_open.insert(w, b);
                queue.push_back({w, b});
            }
            if (hat_e0_left.contains(b, w) && w - a >= 2 && !hat_open.contains(a, w)) {
                hat_open.insert(a, w);
                queue.push_back({a, w});
            }
        }
    }

    HatBar hb;
    hb.hat_e0_left = hat_e0_left;
    hb.hat_open_r = hat_open;

    EdgeSet chain_r(n), hat_e0(n);
    for (int i = 1; i < n; ++i) chain_r.insert(i, i + 1);
    hat_e0 = chain_r;
    hat_e0 |= hat_e0_left;
    hb.hat_env = make_environment(std::move(hat_e0), hat_open);
    hb.bar_env = make_environment(chain_r, hat_open);
    return hb;
}

TradingReport verify_trading(const Environment& env) {
    TradingReport report;
    HatBar hb = build_hat_bar(env);

    EdgeSet hat_occ = hb.hat_env.e0;
    EdgeSet bar_occ = hb.bar_env.e0;

    if (set_difference(hat_occ, hb.hat_e0_left) != bar_occ) {
        report.ok = report.base_ok = report.identity_ok = false;
        report.first_bad_round = 0;
        report.detail = "bar e0 differs from hat e0 minus the leftward closure";
        return report;
    }

    int round = 0;
    while (true) {
        EdgeSet hat_next = step(hb.hat_env, hat_occ);
        EdgeSet bar_next = step(hb.bar_env, bar_occ);
        ++round;
        if (set_difference(hat_next, hb.hat_e0_left) != bar_next) {
            report.ok = report.identity_ok = false;
            report.first_bad_round = round;
            report.detail = "trading identity fails at round " + std::to_string(round);
            return report;
        }
        bool stable = hat_next == hat_occ && bar_next == bar_occ;
        hat_occ = std::move(hat_next);
        bar_occ = std::move(bar_next);
        if (stable) break;
    }

    // Hat dominance and leftward containment against the original run.
    Trajectory orig = run(env);
    bool dominance = true, containment = true;
    for (int i = 1; i <= env.n && (dominance || containment); ++i)
        for (int j = 1; j <= env.n; ++j) {
            if (i == j || !orig.occupied(i, j)) continue;
            if (j > i) {
                if (!hat_occ.contains(i, j)) dominance = false;
            } else {
                if (!hb.hat_e0_left.contains(i, j)) containment = false;
                if (!hat_occ.contains(i, j)) dominance = false;
            }
        }
    report.dominance_ok = dominance;
    report.containment_ok = containment;
    if (!dominance) report.detail = "original fixpoint escapes the hat fixpoint";
    if (!containment) report.detail = "occupied leftward edge outside the leftward closure";
    report.ok = report.identity_ok && dominance && containment;
    return report;
}

} // namespace tcperc
