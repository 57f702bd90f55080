// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_CLOSURE_HPP
#define HYPERBORN_CLOSURE_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperborn/family.hpp"
#include "nlohmann/json.hpp"

namespace hyperborn {

/// A named pure map Family -> Family over one space's hyperspace, together
/// with provenance describing which construction produced it. Operators are
/// never materialized as tables; they are evaluated on demand.
struct ClosureOperator {
    std::string name;
    nlohmann::json provenance;
    Family universe = 0;
    /// Set by constructions that are known to produce an idempotent map
    /// (topology-derived closures). meet_closure requires it.
    bool topological_hint = false;
    std::function<Family(Family)> map;

    Family operator()(Family f) const { return map(f); }
};

enum class Side { Lower, Upper, Both };

std::string side_str(Side s);

/// Closure of the lower / upper / two-sided Hausdorff-distance pretopology
/// (which on a finite space is already topological).
Family cl_metric(const FiniteSpace& space, Side side, Family fam);

/// The bornological closures: membership of A tested against every bounded
/// set (maximal ideal members suffice) at the sub-minimal band.
Family cl_born(const FiniteSpace& space, const Ideal& s, Side side, Family fam);

/// Closure of the bracket topology tau(S): A is in the closure of B iff every
/// bounded set gives the same trace on A as on some member of B.
Family cl_tau(const FiniteSpace& space, const Ideal& s, Family fam);

struct HyperTopology; // topology.hpp

/// Bornological modification of a lower hyperspace topology T: A belongs iff
/// every bounded subset of A lies in cl^T of the family.
Family cl_lower_mod(const FiniteSpace& space, const HyperTopology& t, const Ideal& s,
                    Family fam);

/// Bornological modification of an upper hyperspace topology T: A belongs iff
/// for every bounded S, A lies in cl^T of the family's traces on S.
Family cl_upper_mod(const FiniteSpace& space, const HyperTopology& t, const Ideal& s,
                    Family fam);

ClosureOperator make_cl_metric(const FiniteSpace& space, Side side);
ClosureOperator make_cl_born(const FiniteSpace& space, const Ideal& s, Side side);
ClosureOperator make_cl_tau(const FiniteSpace& space, const Ideal& s);
ClosureOperator make_cl_lower_mod(const FiniteSpace& space, const HyperTopology& t,
                                  const Ideal& s);
ClosureOperator make_cl_upper_mod(const FiniteSpace& space, const HyperTopology& t,
                                  const Ideal& s);
ClosureOperator make_identity_operator(const FiniteSpace& space);

struct HullResult {
    Family hull;
    int iterations;
};

/// Least op-closed superset of fam, by iterating op to a fixed point.
HullResult idempotent_hull(const ClosureOperator& op, Family fam);

/// A family is open iff the closure of its complement misses it.
bool is_open(const FiniteSpace& space, const ClosureOperator& op, Family g);

/// All open families of the operator's (pre)topology. Scans every family;
/// |X| <= 4 only.
std::vector<Family> enumerate_opens(const FiniteSpace& space, const ClosureOperator& op);

enum class Scope { Exhaustive, Sampled };

struct CechAxiomResult {
    std::string axiom;
    bool pass;
    std::optional<std::pair<Family, Family>> witness; // families violating it
};

struct CechReport {
    std::vector<CechAxiomResult> axioms;
    long long cases = 0;
    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
};

/// Checks expansiveness, monotonicity, finite additivity and cl(empty)=empty.
/// Exhaustive scope walks all family pairs (|X| <= 4 required); sampled scope
/// draws `trials` seeded pairs.
CechReport cech_validate(const FiniteSpace& space, const ClosureOperator& op, Scope scope,
                         int trials = 200, std::uint64_t seed = 7);

struct TopologicalResult {
    bool topological;
    std::optional<Family> witness; // family with cl(cl(F)) != cl(F)
};

TopologicalResult is_topological(const FiniteSpace& space, const ClosureOperator& op,
                                 Scope scope, int trials = 200, std::uint64_t seed = 7);

/// Closure of the infimum of two topologies: alternate both idempotent
/// closures until the result is stable under each.
Family meet_closure(const ClosureOperator& cl1, const ClosureOperator& cl2, Family fam);

ClosureOperator make_meet_operator(const FiniteSpace& space, const ClosureOperator& cl1,
                                   const ClosureOperator& cl2);

} // namespace hyperborn

#endif
