// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_TOPOLOGY_HPP
#define HYPERBORN_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "hyperborn/closure.hpp"

namespace hyperborn {

enum class Directedness { Lower, Upper, BothIndiscrete, Neither };

std::string directedness_str(Directedness d);

/// A topology on the hyperspace, carried by its (idempotent) closure
/// operator. Open sets are derived, not stored; full enumeration is only done
/// on hyperspaces with at most 16 points.
struct HyperTopology {
    std::string name;
    ClosureOperator cl;
    Directedness kind = Directedness::Neither;
    bool miss = false;

    bool lowerish() const {
        return kind == Directedness::Lower || kind == Directedness::BothIndiscrete;
    }
    bool upperish() const {
        return kind == Directedness::Upper || kind == Directedness::BothIndiscrete;
    }
    bool closed_in(Family f) const { return cl(f) == f; }
};

/// [A, B]: all sets containing A and disjoint from B. Empty as a family iff A
/// meets B.
Family bracket_family(const FiniteSpace& space, Subset a, Subset b);

HyperTopology make_metric_topology(const FiniteSpace& space, Side side);
HyperTopology make_tau_topology(const FiniteSpace& space, const Ideal& s);

/// Topology generated by the base of down-sets of the given collection
/// (closed under intersections, with the full hyperspace adjoined).
HyperTopology make_miss_topology(const FiniteSpace& space,
                                 const std::vector<Subset>& collection);

/// Topology given by an explicit closed-set list. The list must contain the
/// empty and full families and be closed under pairwise union and
/// intersection; only meant for hyperspaces with at most 16 points.
HyperTopology make_table_topology(const FiniteSpace& space,
                                  const std::vector<Family>& closed_sets);

HyperTopology make_indiscrete_topology(const FiniteSpace& space);
HyperTopology make_discrete_topology(const FiniteSpace& space);

/// Classification by scanning all opens: lower iff all upward directed, upper
/// iff all downward directed, both only for the indiscrete topology.
Directedness directedness_check(const FiniteSpace& space, const HyperTopology& t);

/// True iff every open has, around each of its members, an open principal
/// down-set inside it.
bool is_miss_topology(const FiniteSpace& space, const HyperTopology& t);

/// All topologies on the hyperspace of a space with |X| <= 2, by exhausting
/// candidate open-set collections. The counterexample pool for the generic-T
/// propositions.
std::vector<HyperTopology> enumerate_table_topologies(const FiniteSpace& space);

} // namespace hyperborn

#endif
