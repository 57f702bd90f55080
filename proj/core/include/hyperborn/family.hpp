// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_FAMILY_HPP
#define HYPERBORN_FAMILY_HPP

#include <vector>

#include "hyperborn/space.hpp"

namespace hyperborn {

/// An ideal of "bounded" sets: contains the empty set, downward closed,
/// closed under finite unions. Stored extensionally as a Family bitmask so
/// every quantifier over members is a loop.
class Ideal {
public:
    /// Validates the ideal axioms; throws InvalidSpec on violation.
    Ideal(const FiniteSpace& space, Family members);

    Family members() const { return members_; }
    bool contains(Subset s) const { return subset_in(members_, s); }

    /// Members with no strict superset inside the ideal. For the antitone
    /// membership conditions of the bornological closures these dominate the
    /// full member list.
    const std::vector<Subset>& maximal_members() const { return maximal_; }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.members_ == b.members_;
    }

private:
    Family members_;
    std::vector<Subset> maximal_;
};

bool is_ideal_family(const FiniteSpace& space, Family f);

/// Smallest ideal containing the generators: union-close, then take subsets.
Ideal generate_ideal(const FiniteSpace& space, const std::vector<Subset>& generators);

/// All ideals on the space, in increasing bitmask order. Exhaustive scan of
/// the 2^2^|X| candidate families; meant for |X| <= 4.
std::vector<Ideal> enumerate_ideals(const FiniteSpace& space);

/// Sub-ideals of `s`, i.e. ideals whose members all lie in `s`.
std::vector<Ideal> enumerate_sub_ideals(const FiniteSpace& space, const Ideal& s);

/// S^tb: sets covered by some member's eps-enlargement at every eps. The
/// condition is monotone in eps, so the sub-minimal band decides it.
Ideal tb_hull(const FiniteSpace& space, const Ideal& s);

/// S^+: members with some enlargement still in the ideal. Downward closure of
/// the ideal collapses the existential to the sub-minimal band.
Ideal plus_ideal(const FiniteSpace& space, const Ideal& s);

/// One step of the shrinking chain below: members S such that every A whose
/// sub-minimal enlargement covers S contains a member that in turn covers S.
Ideal hat_ideal(const FiniteSpace& space, const Ideal& s);

struct StarResult {
    Ideal ideal;
    int iterations; // hat applications until the output reproduced its input
};

/// Largest hat-stable sub-ideal, reached by iterating hat_ideal to a fixed
/// point. The chain strictly decreases, so it stops within |S| steps.
StarResult star_ideal(const FiniteSpace& space, const Ideal& s);

/// S^- = (S^tb)^*.
Ideal minus_ideal(const FiniteSpace& space, const Ideal& s);

/// Condition on a subfamily: each member S has an eps such that every B with
/// S inside B^eps contains some member of the subfamily. Requires the
/// subfamily to lie inside `ambient`.
bool satisfies_club(const FiniteSpace& space, Family ssub, const Ideal& ambient);

/// Every member has some enlargement inside the family. The input need not be
/// downward closed, so the existential is decided over all band
/// representatives, not just the sub-minimal one.
bool stable_under_small_enlargements(const FiniteSpace& space, Family f);

/// {X \ S | S in S}.
Family cobounded_family(const FiniteSpace& space, const Ideal& s);

enum class UpDown { Up, Down };

/// Upward or downward closure of a family in the subset order.
Family updown(const FiniteSpace& space, Family f, UpDown direction);

/// {A | A meets S}.
Family hit_family(const FiniteSpace& space, Subset s);

} // namespace hyperborn

#endif
