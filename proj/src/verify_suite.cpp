#include "tcperc/verify_suite.hpp"

#include <algorithm>

#include "tcperc/dynamics.hpp"
#include "tcperc/families.hpp"
#include "tcperc/hat_bar.hpp"
#include "tcperc/open_model.hpp"
#include "tcperc/oracles.hpp"
#include "tcperc/predicates.hpp"
#include "tcperc/rng.hpp"
#include "tcperc/tilde.hpp"

namespace tcperc {

namespace {

constexpr uint64_t kInstanceTag = 0x696E7374ULL; // "inst"

LemmaResult make_result(std::string name, int instances) {
    LemmaResult r;
    r.name = std::move(name);
    r.instances = instances;
    return r;
}

void finish(LemmaResult& r) { r.pass = r.violations == 0; }

} // namespace

Environment random_small_environment(uint64_t base_seed, int idx, int max_n) {
    SplitMix64 rng(derive_seed(base_seed, kInstanceTag, idx));
    FamilySpec spec;
    switch (idx % 4) {
        case 0: spec.kind = FamilyKind::kLinearUnoriented; break;
        case 1: spec.kind = FamilyKind::kLinearOriented; break;
        case 2:
            spec.kind = FamilyKind::kErInitial;
            spec.p_initial = 0.3;
            spec.family_seed = rng.next();
            break;
        default: spec.kind = FamilyKind::kRPairs; break;
    }
    int min_n = 4;
    int n = min_n + static_cast<int>(rng.next() % static_cast<uint64_t>(max_n - min_n + 1));
    if (spec.kind == FamilyKind::kRPairs && n % 2 != 0) n = n > min_n ? n - 1 : min_n;
    spec.n = n;
    EdgeSet e0 = make_family(spec);

    OpenModel model;
    model.seed = rng.next();
    if (spec.kind == FamilyKind::kLinearUnoriented || spec.kind == FamilyKind::kLinearOriented) {
        model.mode = OpenMode::kLeftRight;
        model.p_left = 0.1 + 0.4 * rng.uniform01();
        model.p_right = 0.1 + 0.4 * rng.uniform01();
    } else {
        model.mode = OpenMode::kUniform;
        model.p_open = 0.1 + 0.4 * rng.uniform01();
    }
    return make_environment(e0, sample_open(e0, model));
}

EdgeSet random_rightward_opens(uint64_t base_seed, int idx, int n, double p) {
    SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 1, idx));
    EdgeSet open(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (rng.uniform01() < p) open.insert(i, j);
    return open;
}

std::vector<LemmaResult> run_structural_suite(int instances, int max_n, uint64_t base_seed) {
    LemmaResult connected = make_result("connected-necessary", instances);
    LemmaResult length_bound = make_result("witness-length-bound", instances);
    LemmaResult horns = make_result("ie-horn", instances);
    LemmaResult al = make_result("al-property", instances);

    for (int idx = 0; idx < instances; ++idx) {
        Environment env = random_small_environment(base_seed, idx, max_n);
        Trajectory traj = run(env);
        DistanceMatrix dist(env.e0);

        struct OccupiedEdge {
            EdgeRef e;
            int length;
            bool in_e0;
        };
        std::vector<OccupiedEdge> edges;
        int longest = 0;
        for (int i = 1; i <= env.n; ++i)
            for (int j = 1; j <= env.n; ++j) {
                if (i == j || !traj.occupied(i, j)) continue;
                int len = dist.at(i, j);
                if (len < 0) {
                    ++connected.violations;
                    if (connected.detail.empty())
                        connected.detail = "occupied edge without oriented e0 path, instance " +
                                           std::to_string(idx);
                    continue;
                }
                edges.push_back({{i, j}, len, env.e0.contains(i, j)});
                longest = std::max(longest, len);
            }

        std::vector<int> witness_sizes(edges.size());
        for (size_t t = 0; t < edges.size(); ++t) {
            WitnessSet w = minimal_witness(env, edges[t].e);
            witness_sizes[t] = w.cardinality;
            if (w.cardinality < edges[t].length + 1) {
                ++length_bound.violations;
                if (length_bound.detail.empty())
                    length_bound.detail = "witness smaller than length+1, instance " +
                                          std::to_string(idx);
            }
            if (!edges[t].in_e0) {
                for (int v : w.vertices)
                    if (horns_of(env, w.vertices, v).empty()) {
                        ++horns.violations;
                        if (horns.detail.empty())
                            horns.detail = "vertex " + std::to_string(v) +
                                           " hornless in witness, instance " + std::to_string(idx);
                    }
            }
        }

        for (int k = 1; k <= longest; ++k) {
            bool found = false;
            for (int size : witness_sizes)
                if (size >= k + 1 && size <= 2 * k) {
                    found = true;
                    break;
                }
            if (!found) {
                ++al.violations;
                if (al.detail.empty())
                    al.detail = "no witness size in [" + std::to_string(k + 1) + "," +
                                std::to_string(2 * k) + "], instance " + std::to_string(idx);
            }
        }
    }

    finish(connected);
    finish(length_bound);
    finish(horns);
    finish(al);
    return {connected, length_bound, horns, al};
}

LemmaResult check_ie_good_intervals(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("ie-good-interval", instances);
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 2, idx));
        int n = 5 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 4)));
        double p = 0.2 + 0.6 * rng.uniform01();
        EdgeSet open_r = random_rightward_opens(base_seed, idx, n, p);
        Trajectory traj = run_tilde(open_r);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j) {
                if (!traj.occupied(i, j)) continue;
                auto [a, b] = minimal_tilde_interval(open_r, {i, j});
                if (!is_good_interval(open_r, a, b)) {
                    ++r.violations;
                    if (r.detail.empty())
                        r.detail = "minimal interval [" + std::to_string(a) + "," +
                                   std::to_string(b) + "] not good, instance " + std::to_string(idx);
                }
            }
    }
    finish(r);
    return r;
}

LemmaResult check_catalan_counts(int ell_min, int ell_max) {
    LemmaResult r = make_result("catalan-minimal-sets", ell_max - ell_min + 1);
    for (int ell = ell_min; ell <= ell_max; ++ell) {
        CatalanSetsReport report = catalan_minimal_sets(ell);
        uint64_t bracketing = catalan_bracketing_masks(ell).size();
        if (report.count != bracketing || !report.all_expected_size) {
            ++r.violations;
            if (r.detail.empty())
                r.detail = "ell " + std::to_string(ell) + ": count " + std::to_string(report.count) +
                           " vs bracketing " + std::to_string(bracketing) +
                           (report.all_expected_size ? "" : ", off-size set present");
        }
    }
    finish(r);
    return r;
}

LemmaResult check_site_path_implication(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("site-path-implication", instances);
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 3, idx));
        int n = 20 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 19)));
        double p = 0.2 + 0.7 * rng.uniform01();
        EdgeSet e0(n), open(n);
        for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                if (rng.uniform01() < p) open.insert(i, j);
        Environment env = make_environment(std::move(e0), std::move(open));
        EdgeSet reach = oriented_site_reachability(env);
        Trajectory traj = run(env);
        reach.for_each_edge([&](int i, int j) {
            if (!traj.occupied(i, j)) {
                ++r.violations;
                if (r.detail.empty())
                    r.detail = "reachable but never occupied: " + std::to_string(i) + "->" +
                               std::to_string(j) + ", instance " + std::to_string(idx);
            }
        });
    }
    finish(r);
    return r;
}

LemmaResult check_trading_suite(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("edge-trading", instances);
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 4, idx));
        int n = 8 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 7)));
        FamilySpec spec;
        spec.kind = FamilyKind::kLinearUnoriented;
        spec.n = n;
        EdgeSet e0 = make_family(spec);
        OpenModel model;
        model.mode = OpenMode::kLeftRight;
        model.p_left = 0.05 + 0.45 * rng.uniform01();
        model.p_right = 0.05 + 0.45 * rng.uniform01();
        model.seed = rng.next();
        Environment env = make_environment(e0, sample_open(e0, model));
        TradingReport report = verify_trading(env);
        if (!report.ok) {
            ++r.violations;
            if (r.detail.empty())
                r.detail = report.detail + ", instance " + std::to_string(idx);
        }
    }
    finish(r);
    return r;
}

LemmaResult check_slowed_equivalence(int instances, int max_n, int order_seeds,
                                     uint64_t base_seed) {
    LemmaResult r = make_result("slowed-parallel-equivalence", instances);
    for (int idx = 0; idx < instances; ++idx) {
        Environment env = random_small_environment(base_seed, idx, max_n);
        EdgeSet parallel_final = run(env).final_edge_set();
        for (int s = 0; s < order_seeds; ++s) {
            uint64_t order_seed = derive_seed(base_seed, stream_tag::kSlowedOrder, idx * 97 + s);
            EdgeSet slowed_final = run_slowed(env, order_seed).final_edge_set();
            if (slowed_final != parallel_final) {
                ++r.violations;
                if (r.detail.empty())
                    r.detail = "slowed fixpoint differs, instance " + std::to_string(idx) +
                               ", order seed index " + std::to_string(s);
            }
        }
        EdgeSet lex_final = run_slowed(env, 0, SlowedOrder::kLex).final_edge_set();
        if (lex_final != parallel_final) {
            ++r.violations;
            if (r.detail.empty())
                r.detail = "lexicographic slowed fixpoint differs, instance " + std::to_string(idx);
        }
    }
    finish(r);
    return r;
}

LemmaResult check_abundance_saturation(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("abundance-implies-saturation", instances);
    int abundant_seen = 0;
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 5, idx));
        int n = 10 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 9)));
        FamilySpec spec;
        spec.kind = idx % 2 == 0 ? FamilyKind::kLinearUnoriented : FamilyKind::kErInitial;
        spec.n = n;
        spec.p_initial = 0.3;
        spec.family_seed = rng.next();
        EdgeSet e0 = make_family(spec);
        OpenModel model;
        model.mode = OpenMode::kUniform;
        model.p_open = 0.3 + 0.4 * rng.uniform01();
        model.seed = rng.next();
        Environment env = make_environment(e0, sample_open(e0, model));
        Trajectory traj = run(env);
        EdgeSet fixpoint = traj.final_edge_set();
        if (is_abundant(fixpoint)) {
            ++abundant_seen;
            if (!is_saturated(env, traj)) {
                ++r.violations;
                if (r.detail.empty())
                    r.detail = "abundant fixpoint without saturation, instance " + std::to_string(idx);
            }
        }
    }
    if (r.detail.empty())
        r.detail = std::to_string(abundant_seen) + " of " + std::to_string(instances) +
                   " fixpoints abundant";
    finish(r);
    return r;
}

LemmaResult check_tilde_domination(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("tilde-dominates-catalan", instances);
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 6, idx));
        int n = 5 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 4)));
        double p = 0.1 + 0.7 * rng.uniform01();
        EdgeSet open_r = random_rightward_opens(base_seed, idx + 100000, n, p);
        EdgeSet tilde_final = run_tilde(open_r).final_edge_set();

        EdgeSet e0(n);
        for (int i = 1; i < n; ++i) e0.insert(i, i + 1);
        Environment env = make_environment(std::move(e0), open_r);
        EdgeSet catalan_final = run(env).final_edge_set();
        if (!catalan_final.is_subset_of(tilde_final)) {
            ++r.violations;
            if (r.detail.empty())
                r.detail = "catalan fixpoint escapes tilde fixpoint, instance " + std::to_string(idx);
        }
    }
    finish(r);
    return r;
}

LemmaResult check_hat_independence(int instances, int max_n, uint64_t base_seed) {
    LemmaResult r = make_result("hat-left-closure-independence", instances);
    for (int idx = 0; idx < instances; ++idx) {
        SplitMix64 rng(derive_seed(base_seed, kInstanceTag + 7, idx));
        int n = 8 + static_cast<int>(rng.next() % static_cast<uint64_t>(std::max(1, max_n - 7)));
        FamilySpec spec;
        spec.kind = FamilyKind::kLinearUnoriented;
        spec.n = n;
        EdgeSet e0 = make_family(spec);

        OpenModel model;
        model.mode = OpenMode::kLeftRight;
        model.p_left = 0.05 + 0.45 * rng.uniform01();
        model.p_right = 0.05 + 0.45 * rng.uniform01();
        model.seed = rng.next();
        Environment env = make_environment(e0, sample_open(e0, model));
        HatBar hb = build_hat_bar(env);

        // Same leftward opens, rightward opens replaced wholesale.
        EdgeSet other_open(n);
        env.open.for_each_edge([&](int i, int j) {
            if (j < i) other_open.insert(i, j);
        });
        SplitMix64 alt(derive_seed(base_seed, kInstanceTag + 8, idx));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                if (alt.uniform01() < 0.5) other_open.insert(i, j);
        Environment env2 = make_environment(e0, std::move(other_open));
        HatBar hb2 = build_hat_bar(env2);
        if (hb.hat_e0_left != hb2.hat_e0_left) {
            ++r.violations;
            if (r.detail.empty())
                r.detail = "leftward closure changed with rightward opens, instance " +
                           std::to_string(idx);
        }
    }
    finish(r);
    return r;
}

std::vector<LemmaResult> run_verify_suite(const VerifyOptions& options) {
    std::vector<LemmaResult> results = run_structural_suite(options.instances, options.max_n,
                                                            options.base_seed);
    results.push_back(check_ie_good_intervals(options.instances, options.max_n, options.base_seed));
    results.push_back(check_catalan_counts(2, 6));
    results.push_back(check_site_path_implication(std::min(options.instances, 100),
                                                  std::max(options.max_n, 40), options.base_seed));
    results.push_back(check_trading_suite(options.instances,
                                          std::max(options.max_n, 30), options.base_seed));
    results.push_back(check_slowed_equivalence(options.instances, std::max(options.max_n, 24), 3,
                                               options.base_seed));
    results.push_back(check_abundance_saturation(options.instances, std::max(options.max_n, 24),
                                                 options.base_seed));
    results.push_back(check_tilde_domination(options.instances, std::max(options.max_n, 30),
                                             options.base_seed));
    results.push_back(check_hat_independence(options.instances, std::max(options.max_n, 24),
                                             options.base_seed));
    return results;
}

} // namespace tcperc
