// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/topology.hpp"

#include <algorithm>

#include "hyperborn/errors.hpp"

namespace hyperborn {

std::string directedness_str(Directedness d) {
    switch (d) {
        case Directedness::Lower: return "lower";
        case Directedness::Upper: return "upper";
        case Directedness::BothIndiscrete: return "both-indiscrete";
        case Directedness::Neither: return "neither";
    }
    return "?";
}

Family bracket_family(const FiniteSpace& space, Subset a, Subset b) {
    if ((a & b) != 0) return 0;
    const Subset full = space.full_set();
    Family out = 0;
    for (Subset c = 0; c <= full; ++c)
        if ((a & ~c) == 0 && (c & b) == 0) out = family_with(out, c);
    return out;
}

namespace {

bool upward_closed(const FiniteSpace& space, Family g) {
    return updown(space, g, UpDown::Up) == g;
}

bool downward_closed(const FiniteSpace& space, Family g) {
    return updown(space, g, UpDown::Down) == g;
}

// Small spaces get their declared kind double-checked by scanning opens.
void classify_small(const FiniteSpace& space, HyperTopology& t) {
    if (space.hyper_size() > 8) return;
    t.kind = directedness_check(space, t);
    t.miss = is_miss_topology(space, t);
}

} // namespace

HyperTopology make_metric_topology(const FiniteSpace& space, Side side) {
    HyperTopology t;
    t.name = side == Side::Lower ? "H-" : side == Side::Upper ? "H+" : "H";
    t.cl = make_cl_metric(space, side);
    switch (side) {
        case Side::Lower: t.kind = Directedness::Lower; t.miss = false; break;
        case Side::Upper: t.kind = Directedness::Upper; t.miss = true; break;
        case Side::Both: t.kind = Directedness::Neither; t.miss = false; break;
    }
    classify_small(space, t);
    return t;
}

HyperTopology make_tau_topology(const FiniteSpace& space, const Ideal& s) {
    HyperTopology t;
    t.name = "tau(S)";
    t.cl = make_cl_tau(space, s);
    t.kind = (s.members() == Family{1}) ? Directedness::BothIndiscrete : Directedness::Neither;
    t.miss = false;
    classify_small(space, t);
    return t;
}

HyperTopology make_miss_topology(const FiniteSpace& space,
                                 const std::vector<Subset>& collection) {
    const Subset full = space.full_set();
    for (Subset g : collection)
        if ((g & ~full) != 0) throw InvalidSpec("miss-topology generator outside the space");

    // Base: down-sets of all intersections of the collection; the empty
    // intersection contributes the full hyperspace.
    std::vector<Subset> gens;
    const std::size_t k = collection.size();
    if (k > 16) throw InvalidSpec("miss-topology collection too large");
    for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
        Subset g = full;
        for (std::size_t i = 0; i < k; ++i)
            if ((pick >> i) & 1u) g &= collection[i];
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end());

    HyperTopology t;
    t.name = "miss";
    t.cl.name = "cl_miss";
    t.cl.provenance = {{"op", "cl_miss"}};
    t.cl.universe = space.full_hyperspace();
    t.cl.topological_hint = true;
    t.cl.map = [&space, gens](Family fam) {
        const int hyper = space.hyper_size();
        Family out = 0;
        for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
            bool member = true;
            for (Subset g : gens) {
                if ((a & ~g) != 0) continue; // base neighbourhood does not contain a
                Family down = 0;
                for (Subset b = g; ; b = (b - 1) & g) {
                    down = family_with(down, b);
                    if (b == 0) break;
                }
                if ((down & fam) == 0) { member = false; break; }
            }
            if (member) out = family_with(out, a);
        }
        return out;
    };
    t.kind = Directedness::Upper;
    t.miss = true;
    classify_small(space, t);
    return t;
}

HyperTopology make_table_topology(const FiniteSpace& space,
                                  const std::vector<Family>& closed_sets) {
    if (space.hyper_size() > 16)
        throw InvalidSpec("table topologies are limited to hyperspaces with <= 16 points");
    const Family all = space.full_hyperspace();
    std::vector<Family> closed = closed_sets;
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    auto has = [&](Family f) {
        return std::binary_search(closed.begin(), closed.end(), f);
    };
    if (!has(0) || !has(all))
        throw InvalidSpec("closed-set table must contain the empty and full families");
    for (Family a : closed)
        for (Family b : closed)
            if (!has(a | b) || !has(a & b))
                throw NonIdempotentTable("closed-set table not closed under union/intersection");

    HyperTopology t;
    t.name = "table";
    t.cl.name = "cl_table";
    t.cl.provenance = {{"op", "cl_table"}};
    t.cl.universe = all;
    t.cl.topological_hint = true;
    t.cl.map = [closed](Family fam) {
        Family out = ~Family{0};
        for (Family c : closed)
            if (family_subset(fam, c)) out &= c;
        return out;
    };
    t.kind = directedness_check(space, t);
    t.miss = is_miss_topology(space, t);
    return t;
}

HyperTopology make_indiscrete_topology(const FiniteSpace& space) {
    HyperTopology t;
    t.name = "indiscrete";
    t.cl.name = "cl_indiscrete";
    t.cl.provenance = {{"op", "cl_indiscrete"}};
    t.cl.universe = space.full_hyperspace();
    t.cl.topological_hint = true;
    const Family all = space.full_hyperspace();
    t.cl.map = [all](Family f) { return f == 0 ? Family{0} : all; };
    t.kind = Directedness::BothIndiscrete;
    t.miss = true; // the full hyperspace is a principal down-set
    return t;
}

HyperTopology make_discrete_topology(const FiniteSpace& space) {
    HyperTopology t;
    t.name = "discrete";
    t.cl = make_identity_operator(space);
    t.kind = space.hyper_size() == 1 ? Directedness::BothIndiscrete : Directedness::Neither;
    t.miss = false;
    classify_small(space, t);
    return t;
}

Directedness directedness_check(const FiniteSpace& space, const HyperTopology& t) {
    bool lower = true, upper = true;
    for (Family g : enumerate_opens(space, t.cl)) {
        if (!upward_closed(space, g)) lower = false;
        if (!downward_closed(space, g)) upper = false;
        if (!lower && !upper) return Directedness::Neither;
    }
    if (lower && upper) return Directedness::BothIndiscrete;
    return lower ? Directedness::Lower : Directedness::Upper;
}

bool is_miss_topology(const FiniteSpace& space, const HyperTopology& t) {
    const std::vector<Family> opens = enumerate_opens(space, t.cl);
    auto open = [&](Family f) {
        return std::find(opens.begin(), opens.end(), f) != opens.end();
    };
    const Subset full = space.full_set();
    for (Family g : opens) {
        for (Subset a = 0; a <= full; ++a) {
            if (!subset_in(g, a)) continue;
            bool found = false;
            for (Subset cap = 0; cap <= full && !found; ++cap) {
                if ((a & ~cap) != 0) continue;
                Family down = 0;
                for (Subset b = cap; ; b = (b - 1) & cap) {
                    down = family_with(down, b);
                    if (b == 0) break;
                }
                if (family_subset(down, g) && open(down)) found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

std::vector<HyperTopology> enumerate_table_topologies(const FiniteSpace& space) {
    if (space.hyper_size() > 4)
        throw DomainError("table-topology enumeration is limited to |X| <= 2");
    const int hyper = space.hyper_size();
    const Family all = space.full_hyperspace();
    const std::uint32_t count = 1u << (1u << hyper); // collections of families
    std::vector<HyperTopology> out;
    for (std::uint32_t opens = 0; opens < count; ++opens) {
        auto contains = [&](Family f) { return (opens >> f) & 1u; };
        if (!contains(0) || !contains(all)) continue;
        bool ok = true;
        for (Family a = 0; ok && a <= all; ++a) {
            if (!contains(a)) continue;
            for (Family b = a; b <= all; ++b)
                if (contains(b) && (!contains(a | b) || !contains(a & b))) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<Family> closed;
        for (Family a = 0; a <= all; ++a)
            if (contains(a)) closed.push_back(all & ~a);
        HyperTopology t = make_table_topology(space, closed);
        t.name = "table#" + std::to_string(out.size());
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace hyperborn
