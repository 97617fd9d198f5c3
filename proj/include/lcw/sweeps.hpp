#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lcw {

struct SweepOptions {
    int threads = 0;  // 0 = runtime default; 1 = the serial reference path
    std::uint64_t seed = 1;
};

struct SweepResult {
    std::string name;
    long long checked = 0;
    long long violations = 0;
    double seconds = 0.0;
    std::string notes;       // deterministic; independent of thread count
    nlohmann::json details;  // first few violation artifacts, empty when clean
};

// Each sweep enumerates a deterministic item list, checks items in parallel
// into per-item slots, and reduces serially in index order, so checked,
// violations, notes, and details never depend on the thread count.

// exact_lcw agrees with the small concrete-state solver, n <= 5.
SweepResult sweep_oracle_agreement(const SweepOptions& opts);

// no induced K_2+K_1 -> complete multipartite, lcw <= 2;
// no induced P_3 -> disjoint cliques, lcw <= 3.
SweepResult sweep_degenerate_facts(const SweepOptions& opts, int max_n = 7);

// randomized trials of the four composition transforms: target equality
// plus the stated width bound.
SweepResult sweep_composition_audits(const SweepOptions& opts, int trials_each = 1000);

// exact lcw < (m+2)(t+s) on every graph with n <= max_n.
SweepResult sweep_contrapositive(const SweepOptions& opts, int max_n = 8);

// every quasi-threshold graph embeds into its universal host with t <= n;
// the two recognizers agree on every graph.
SweepResult sweep_universal_embedding(const SweepOptions& opts, int max_n = 8);

// lcw(Q_1) = 1, non-decreasing in t, and lcw(Q_4) > lcw(Q_2).
SweepResult sweep_qt_growth(const SweepOptions& opts, int max_t = 4);

// decompose-and-inflate round trip, module validity, and brute-force
// agreement of the block partition for n <= 9.
SweepResult sweep_decomposition(const SweepOptions& opts, int random_trials = 10000,
                                int exhaustive_max_n = 9);

// build_expression verifies, audits match the width formulas node by node,
// and the achieved width is a true upper bound where exact lcw is known.
SweepResult sweep_builder(const SweepOptions& opts, int random_trials = 10000,
                          int exact_max_n = 8);

// All eight, in the order above, at the documented acceptance scales.
std::vector<SweepResult> run_all_sweeps(const SweepOptions& opts);

}  // namespace lcw
