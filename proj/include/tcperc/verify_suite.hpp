#ifndef TCPERC_VERIFY_SUITE_HPP
#define TCPERC_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcperc/environment.hpp"

namespace tcperc {

struct LemmaResult {
    std::string name;
    int instances = 0;
    int violations = 0;
    bool pass = false;
    std::string detail;
};

// Deterministic mixed-family instance used by the small-scale suites.
Environment random_small_environment(uint64_t base_seed, int idx, int max_n);

// Rightward-only open set (lengths >= 2) for the tilde suites.
EdgeSet random_rightward_opens(uint64_t base_seed, int idx, int n, double p);

// Exhaustive structural checks on small instances, one witness search per
// occupied edge shared by all four lemmas:
//   connected-necessary  every occupied edge has an oriented e0 path
//   witness-length-bound |I_e| >= length(e) + 1
//   ie-horn              every vertex of I_e is part of a horn in I_e
//   al-property          witness cardinalities cover [k+1, 2k] for all k
std::vector<LemmaResult> run_structural_suite(int instances, int max_n, uint64_t base_seed);

// Tilde-process minimal intervals are good.
LemmaResult check_ie_good_intervals(int instances, int max_n, uint64_t base_seed);

// Minimal-set counts for ell_min..ell_max match the independent
// derivation-tree enumeration and every set has size ell - 1.
LemmaResult check_catalan_counts(int ell_min, int ell_max);

// Site-percolation reachability implies eventual occupation (Catalan).
LemmaResult check_site_path_implication(int instances, int max_n, uint64_t base_seed);

// Edge trading: per-round identity, hat dominance, leftward containment.
LemmaResult check_trading_suite(int instances, int max_n, uint64_t base_seed);

// run_slowed reaches run()'s fixpoint for several orders per instance.
LemmaResult check_slowed_equivalence(int instances, int max_n, int order_seeds, uint64_t base_seed);

// Whenever the fixpoint is abundant, the vertex set is saturated.
LemmaResult check_abundance_saturation(int instances, int max_n, uint64_t base_seed);

// Tilde fixpoint contains the plain Catalan fixpoint on the same opens.
LemmaResult check_tilde_domination(int instances, int max_n, uint64_t base_seed);

// hat_e0_left does not depend on the rightward opens.
LemmaResult check_hat_independence(int instances, int max_n, uint64_t base_seed);

struct VerifyOptions {
    int max_n = 12;
    int instances = 50;
    uint64_t base_seed = 1;
};

// The full oracle suite with per-lemma pass/fail lines.
std::vector<LemmaResult> run_verify_suite(const VerifyOptions& options);

} // namespace tcperc

#endif // TCPERC_VERIFY_SUITE_HPP
