// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/family.hpp"

#include "hyperborn/errors.hpp"

namespace hyperborn {

bool is_ideal_family(const FiniteSpace& space, Family f) {
    if (!subset_in(f, 0)) return false;
    const int hyper = space.hyper_size();
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        if (!subset_in(f, a)) continue;
        // all submasks of a
        for (Subset b = a; ; b = (b - 1) & a) {
            if (!subset_in(f, b)) return false;
            if (b == 0) break;
        }
        for (Subset b = 0; b < static_cast<Subset>(hyper); ++b)
            if (subset_in(f, b) && !subset_in(f, a | b)) return false;
    }
    return true;
}

Ideal::Ideal(const FiniteSpace& space, Family members) : members_(members) {
    if (!is_ideal_family(space, members))
        throw InvalidSpec("family is not an ideal (needs empty set, subsets, finite unions)");
    const int hyper = space.hyper_size();
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        if (!subset_in(members_, a)) continue;
        bool maximal = true;
        for (Subset b = 0; b < static_cast<Subset>(hyper); ++b)
            if (b != a && subset_in(members_, b) && (a & ~b) == 0) { maximal = false; break; }
        if (maximal) maximal_.push_back(a);
    }
}

Ideal generate_ideal(const FiniteSpace& space, const std::vector<Subset>& generators) {
    const Subset full = space.full_set();
    Family f = Family{1}; // the empty set
    for (Subset g : generators) {
        if ((g & ~full) != 0) throw InvalidSpec("generator is not a subset of the space");
        f = family_with(f, g);
    }
    // close under unions
    bool changed = true;
    while (changed) {
        changed = false;
        for (Subset a = 0; a <= full; ++a) {
            if (!subset_in(f, a)) continue;
            for (Subset b = 0; b <= full; ++b)
                if (subset_in(f, b) && !subset_in(f, a | b)) {
                    f = family_with(f, a | b);
                    changed = true;
                }
        }
    }
    // downward closure
    Family down = 0;
    for (Subset a = 0; a <= full; ++a) {
        if (!subset_in(f, a)) continue;
        for (Subset b = a; ; b = (b - 1) & a) {
            down = family_with(down, b);
            if (b == 0) break;
        }
    }
    return Ideal(space, down);
}

std::vector<Ideal> enumerate_ideals(const FiniteSpace& space) {
    std::vector<Ideal> out;
    const Family all = space.full_hyperspace();
    for (Family f = 1; f <= all; ++f)
        if (is_ideal_family(space, f)) out.emplace_back(space, f);
    return out;
}

std::vector<Ideal> enumerate_sub_ideals(const FiniteSpace& space, const Ideal& s) {
    std::vector<Ideal> out;
    for (const Ideal& cand : enumerate_ideals(space))
        if (family_subset(cand.members(), s.members())) out.push_back(cand);
    return out;
}

Ideal tb_hull(const FiniteSpace& space, const Ideal& s) {
    const int hyper = space.hyper_size();
    Family out = 0;
    for (Subset cand = 0; cand < static_cast<Subset>(hyper); ++cand)
        for (Subset m : s.maximal_members())
            if ((cand & ~space.saturate(m)) == 0) {
                out = family_with(out, cand);
                break;
            }
    return Ideal(space, out);
}

Ideal plus_ideal(const FiniteSpace& space, const Ideal& s) {
    Family out = 0;
    const int hyper = space.hyper_size();
    for (Subset m = 0; m < static_cast<Subset>(hyper); ++m)
        if (s.contains(m) && s.contains(space.saturate(m))) out = family_with(out, m);
    return Ideal(space, out);
}

Ideal hat_ideal(const FiniteSpace& space, const Ideal& s) {
    const int hyper = space.hyper_size();
    Family out = 0;
    for (Subset m = 0; m < static_cast<Subset>(hyper); ++m) {
        if (!s.contains(m)) continue;
        bool ok = true;
        for (Subset a = 0; ok && a < static_cast<Subset>(hyper); ++a) {
            if ((m & ~space.saturate(a)) != 0) continue; // m not within A's small enlargements
            bool found = false;
            for (Subset sa = 0; sa < static_cast<Subset>(hyper); ++sa)
                if (s.contains(sa) && (sa & ~a) == 0 && (m & ~space.saturate(sa)) == 0) {
                    found = true;
                    break;
                }
            ok = found;
        }
        if (ok) out = family_with(out, m);
    }
    return Ideal(space, out);
}

StarResult star_ideal(const FiniteSpace& space, const Ideal& s) {
    Ideal cur = s;
    int iters = 0;
    for (;;) {
        Ideal next = hat_ideal(space, cur);
        ++iters;
        if (next == cur) break;
        cur = next;
    }
    return {cur, iters};
}

Ideal minus_ideal(const FiniteSpace& space, const Ideal& s) {
    return star_ideal(space, tb_hull(space, s)).ideal;
}

bool satisfies_club(const FiniteSpace& space, Family ssub, const Ideal& ambient) {
    if (!family_subset(ssub, ambient.members()))
        throw InvalidSpec("club subfamily must lie inside the ambient ideal");
    const int hyper = space.hyper_size();
    for (Subset m = 0; m < static_cast<Subset>(hyper); ++m) {
        if (!subset_in(ssub, m)) continue;
        for (Subset b = 0; b < static_cast<Subset>(hyper); ++b) {
            if ((m & ~space.saturate(b)) != 0) continue;
            bool found = false;
            for (Subset sb = 0; sb < static_cast<Subset>(hyper); ++sb)
                if (subset_in(ssub, sb) && (sb & ~b) == 0) { found = true; break; }
            if (!found) return false;
        }
    }
    return true;
}

bool stable_under_small_enlargements(const FiniteSpace& space, Family f) {
    const int hyper = space.hyper_size();
    for (Subset m = 0; m < static_cast<Subset>(hyper); ++m) {
        if (!subset_in(f, m)) continue;
        bool found = false;
        for (const Rat& eps : space.band_reps())
            if (subset_in(f, enlarge(space, m, eps))) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

Family cobounded_family(const FiniteSpace& space, const Ideal& s) {
    const Subset full = space.full_set();
    Family out = 0;
    for (Subset m = 0; m <= full; ++m)
        if (s.contains(m)) out = family_with(out, full & ~m);
    return out;
}

Family updown(const FiniteSpace& space, Family f, UpDown direction) {
    const Subset full = space.full_set();
    Family out = 0;
    for (Subset a = 0; a <= full; ++a) {
        if (!subset_in(f, a)) continue;
        for (Subset b = 0; b <= full; ++b) {
            bool related = (direction == UpDown::Up) ? ((a & ~b) == 0) : ((b & ~a) == 0);
            if (related) out = family_with(out, b);
        }
    }
    return out;
}

Family hit_family(const FiniteSpace& space, Subset s) {
    const Subset full = space.full_set();
    Family out = 0;
    for (Subset a = 0; a <= full; ++a)
        if ((a & s) != 0) out = family_with(out, a);
    return out;
}

} // namespace hyperborn
