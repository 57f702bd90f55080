// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_VERIFIER_HPP
#define HYPERBORN_VERIFIER_HPP

#include <memory>
#include <string>
#include <vector>

#include "hyperborn/io.hpp"
#include "hyperborn/topology.hpp"

namespace hyperborn {

/// One machine-checked claim. `branch_true` / `branch_false` count how often
/// each side of an iff-shaped claim was exercised, so vacuous equivalences
/// are visible in the report.
struct CheckResult {
    std::string id;
    std::string claim;
    long long instances = 0;
    bool pass = true;
    std::string witness; // replayable description; empty when passing
    long long branch_true = 0;
    long long branch_false = 0;
};

struct SearchOutcome {
    std::string target;
    bool found = false;
    std::string witness;
};

struct Report {
    std::uint64_t seed = 7;
    int max_points = 3;
    int trials = 200;
    std::vector<CheckResult> checks;   // sorted by id
    std::vector<SearchOutcome> searches;

    bool all_pass() const;
    /// Deterministic machine form: no timing, stable key order, stable check
    /// order. Two runs with the same seed produce identical bytes.
    nlohmann::json to_json() const;
    std::string summary_table() const;
};

/// Pool slice for one ground space: its ideals, its topology pool and the
/// families the checks quantify over. Exhaustive for |X| <= 3 (all ideals,
/// all 2^2^|X| families); seeded samples for |X| = 4.
struct SpacePool {
    std::string name;
    std::shared_ptr<const FiniteSpace> space;
    bool exhaustive = true;
    std::vector<Ideal> all_ideals;  // every ideal on the space (|X| <= 4)
    std::vector<Ideal> ideals;      // the ones the checks run over
    std::vector<Family> fams;       // quantification domain for families
    std::vector<HyperTopology> lower_topos;
    std::vector<HyperTopology> upper_topos; // includes all miss topologies
    std::vector<HyperTopology> miss_topos;
};

struct InstancePool {
    std::uint64_t seed = 7;
    int max_points = 3;
    int trials = 200;
    std::vector<SpacePool> pools;
};

/// Deterministic pool: a fixed roster of true-metric and pseudometric spaces
/// up to max_points, exhaustive ideal/family/topology coverage at |X| <= 3
/// and seeded samples at |X| = 4.
InstancePool build_pool(std::uint64_t seed, int max_points, int trials = 200);

/// Runs every check; optionally restricted to the given check ids.
Report verify_suite(const InstancePool& pool,
                    const std::vector<std::string>& only_checks = {});

/// Targets: "non-topological-lower-mod", "non-topological-upper-mod",
/// "two-sided-reflection-vs-meet". Returns the first witness in pool order.
SearchOutcome search_counterexample(const std::string& target, const InstancePool& pool);

/// All check ids in report order.
std::vector<std::string> check_ids();

} // namespace hyperborn

#endif
