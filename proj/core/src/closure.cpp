// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/closure.hpp"

#include "hyperborn/errors.hpp"
#include "hyperborn/topology.hpp"

namespace hyperborn {

std::string side_str(Side s) {
    switch (s) {
        case Side::Lower: return "lower";
        case Side::Upper: return "upper";
        case Side::Both: return "both";
    }
    return "?";
}

namespace {

bool covered(const FiniteSpace& space, Subset a, Subset b) {
    // a inside every enlargement of b, i.e. a within sat(b)
    return (a & ~space.saturate(b)) == 0;
}

} // namespace

Family cl_metric(const FiniteSpace& space, Side side, Family fam) {
    const int hyper = space.hyper_size();
    Family out = 0;
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        bool member = false;
        for (Subset b = 0; !member && b < static_cast<Subset>(hyper); ++b) {
            if (!subset_in(fam, b)) continue;
            switch (side) {
                case Side::Lower: member = covered(space, a, b); break;
                case Side::Upper: member = covered(space, b, a); break;
                case Side::Both:
                    member = covered(space, a, b) && covered(space, b, a);
                    break;
            }
        }
        if (member) out = family_with(out, a);
    }
    return out;
}

Family cl_born(const FiniteSpace& space, const Ideal& s, Side side, Family fam) {
    const int hyper = space.hyper_size();
    Family out = 0;
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        bool member = true;
        for (Subset m : s.maximal_members()) {
            bool found = false;
            for (Subset b = 0; !found && b < static_cast<Subset>(hyper); ++b) {
                if (!subset_in(fam, b)) continue;
                switch (side) {
                    case Side::Lower: found = covered(space, a & m, b); break;
                    case Side::Upper: found = covered(space, b & m, a); break;
                    case Side::Both:
                        found = covered(space, a & m, b) && covered(space, b & m, a);
                        break;
                }
            }
            if (!found) { member = false; break; }
        }
        if (member) out = family_with(out, a);
    }
    return out;
}

Family cl_tau(const FiniteSpace& space, const Ideal& s, Family fam) {
    const int hyper = space.hyper_size();
    Family out = 0;
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        bool member = true;
        for (Subset m : s.maximal_members()) {
            bool found = false;
            for (Subset b = 0; !found && b < static_cast<Subset>(hyper); ++b)
                if (subset_in(fam, b) && (a & m) == (b & m)) found = true;
            if (!found) { member = false; break; }
        }
        if (member) out = family_with(out, a);
    }
    return out;
}

Family cl_lower_mod(const FiniteSpace& space, const HyperTopology& t, const Ideal& s,
                    Family fam) {
    if (!t.lowerish())
        throw NotLowerTopology("cl_lower_mod needs a lower hyperspace topology, got " +
                               t.name);
    const int hyper = space.hyper_size();
    const Family clt = t.cl(fam);
    Family out = 0;
    for (Subset a = 0; a < static_cast<Subset>(hyper); ++a) {
        bool member = true;
        for (Subset m = 0; m < static_cast<Subset>(hyper); ++m)
            if (s.contains(m) && (m & ~a) == 0 && !subset_in(clt, m)) {
                member = false;
                break;
            }
        if (member) out = family_with(out, a);
    }
    return out;
}

Family cl_upper_mod(const FiniteSpace& space, const HyperTopology& t, const Ideal& s,
                    Family fam) {
    if (!t.upperish())
        throw NotUpperTopology("cl_upper_mod needs an upper hyperspace topology, got " +
                               t.name);
    const int hyper = space.hyper_size();
    Family out = space.full_hyperspace();
    for (Subset m = 0; m < static_cast<Subset>(hyper); ++m) {
        if (!s.contains(m)) continue;
        Family traces = 0;
        for (Subset b = 0; b < static_cast<Subset>(hyper); ++b)
            if (subset_in(fam, b)) traces = family_with(traces, b & m);
        out &= t.cl(traces);
    }
    return out;
}

ClosureOperator make_cl_metric(const FiniteSpace& space, Side side) {
    ClosureOperator op;
    op.name = "cl_metric(" + side_str(side) + ")";
    op.provenance = {{"op", "cl_metric"}, {"side", side_str(side)}};
    op.universe = space.full_hyperspace();
    op.topological_hint = true; // idempotent on finite spaces; asserted by tests
    op.map = [&space, side](Family f) { return cl_metric(space, side, f); };
    return op;
}

ClosureOperator make_cl_born(const FiniteSpace& space, const Ideal& s, Side side) {
    ClosureOperator op;
    op.name = "cl_born(" + side_str(side) + ")";
    op.provenance = {{"op", "cl_born"}, {"side", side_str(side)}};
    op.universe = space.full_hyperspace();
    op.map = [&space, s, side](Family f) { return cl_born(space, s, side, f); };
    return op;
}

ClosureOperator make_cl_tau(const FiniteSpace& space, const Ideal& s) {
    ClosureOperator op;
    op.name = "cl_tau";
    op.provenance = {{"op", "cl_tau"}};
    op.universe = space.full_hyperspace();
    op.topological_hint = true;
    op.map = [&space, s](Family f) { return cl_tau(space, s, f); };
    return op;
}

ClosureOperator make_cl_lower_mod(const FiniteSpace& space, const HyperTopology& t,
                                  const Ideal& s) {
    if (!t.lowerish())
        throw NotLowerTopology("cl_lower_mod needs a lower hyperspace topology, got " +
                               t.name);
    ClosureOperator op;
    op.name = "cl_lower_mod(" + t.name + ")";
    op.provenance = {{"op", "cl_lower_mod"}, {"topology", t.name}};
    op.universe = space.full_hyperspace();
    op.map = [&space, t, s](Family f) { return cl_lower_mod(space, t, s, f); };
    return op;
}

ClosureOperator make_cl_upper_mod(const FiniteSpace& space, const HyperTopology& t,
                                  const Ideal& s) {
    if (!t.upperish())
        throw NotUpperTopology("cl_upper_mod needs an upper hyperspace topology, got " +
                               t.name);
    ClosureOperator op;
    op.name = "cl_upper_mod(" + t.name + ")";
    op.provenance = {{"op", "cl_upper_mod"}, {"topology", t.name}};
    op.universe = space.full_hyperspace();
    op.map = [&space, t, s](Family f) { return cl_upper_mod(space, t, s, f); };
    return op;
}

ClosureOperator make_identity_operator(const FiniteSpace& space) {
    ClosureOperator op;
    op.name = "identity";
    op.provenance = {{"op", "identity"}};
    op.universe = space.full_hyperspace();
    op.topological_hint = true;
    op.map = [](Family f) { return f; };
    return op;
}

HullResult idempotent_hull(const ClosureOperator& op, Family fam) {
    Family cur = fam;
    int iters = 0;
    for (;;) {
        Family next = op(cur);
        ++iters;
        if (next == cur) break;
        cur = next;
    }
    return {cur, iters};
}

bool is_open(const FiniteSpace& space, const ClosureOperator& op, Family g) {
    return (op(space.family_complement(g)) & g) == 0;
}

std::vector<Family> enumerate_opens(const FiniteSpace& space, const ClosureOperator& op) {
    if (space.hyper_size() > 16)
        throw DomainError("open-set enumeration is limited to hyperspaces with <= 16 points");
    std::vector<Family> out;
    const Family all = space.full_hyperspace();
    for (Family g = 0; ; ++g) {
        if (is_open(space, op, g)) out.push_back(g);
        if (g == all) break;
    }
    return out;
}

CechReport cech_validate(const FiniteSpace& space, const ClosureOperator& op, Scope scope,
                         int trials, std::uint64_t seed) {
    CechReport report;
    CechAxiomResult expansive{"expansive", true, std::nullopt};
    CechAxiomResult monotone{"monotone", true, std::nullopt};
    CechAxiomResult additive{"additive", true, std::nullopt};
    CechAxiomResult empty{"empty", true, std::nullopt};

    if (op(0) != 0) { empty.pass = false; empty.witness = {{0, 0}}; }
    report.cases += 1;

    auto check_pair = [&](Family f, Family g) {
        Family cf = op(f);
        Family cg = op(g);
        if (expansive.pass && (f & ~cf) != 0) {
            expansive.pass = false;
            expansive.witness = {{f, f}};
        }
        if (monotone.pass && family_subset(f, g) && (cf & ~cg) != 0) {
            monotone.pass = false;
            monotone.witness = {{f, g}};
        }
        if (additive.pass && op(f | g) != (cf | cg)) {
            additive.pass = false;
            additive.witness = {{f, g}};
        }
        report.cases += 1;
    };

    if (scope == Scope::Exhaustive) {
        if (space.hyper_size() > 16)
            throw DomainError("exhaustive Cech validation is limited to |X| <= 4");
        const Family all = space.full_hyperspace();
        std::vector<Family> cache(static_cast<std::size_t>(all) + 1);
        for (Family f = 0; ; ++f) {
            cache[static_cast<std::size_t>(f)] = op(f);
            if (f == all) break;
        }
        for (Family f = 0; ; ++f) {
            Family cf = cache[static_cast<std::size_t>(f)];
            if (expansive.pass && (f & ~cf) != 0) {
                expansive.pass = false;
                expansive.witness = {{f, f}};
            }
            for (Family g = 0; ; ++g) {
                Family cg = cache[static_cast<std::size_t>(g)];
                if (monotone.pass && family_subset(f, g) && (cf & ~cg) != 0) {
                    monotone.pass = false;
                    monotone.witness = {{f, g}};
                }
                if (additive.pass && cache[static_cast<std::size_t>(f | g)] != (cf | cg)) {
                    additive.pass = false;
                    additive.witness = {{f, g}};
                }
                report.cases += 1;
                if (g == all) break;
            }
            if (f == all) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        const Family all = space.full_hyperspace();
        for (int t = 0; t < trials; ++t) {
            Family f = rng() & all;
            Family g = rng() & all;
            check_pair(f, g);
            check_pair(f, f | g); // guaranteed comparable pair for monotonicity
        }
    }

    report.axioms = {expansive, monotone, additive, empty};
    return report;
}

TopologicalResult is_topological(const FiniteSpace& space, const ClosureOperator& op,
                                 Scope scope, int trials, std::uint64_t seed) {
    const Family all = space.full_hyperspace();
    if (scope == Scope::Exhaustive) {
        if (space.hyper_size() > 16)
            throw DomainError("exhaustive idempotency check is limited to |X| <= 4");
        for (Family f = 0; ; ++f) {
            Family cf = op(f);
            if (op(cf) != cf) return {false, f};
            if (f == all) break;
        }
        return {true, std::nullopt};
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Family f = rng() & all;
        Family cf = op(f);
        if (op(cf) != cf) return {false, f};
    }
    return {true, std::nullopt};
}

Family meet_closure(const ClosureOperator& cl1, const ClosureOperator& cl2, Family fam) {
    if (!cl1.topological_hint || !cl2.topological_hint)
        throw NotIdempotentInput("meet_closure needs two topological closure operators");
    Family cur = fam;
    for (;;) {
        Family next = cl2(cl1(cur));
        if (next == cur) break;
        cur = next;
    }
    // at the fixed point both operators leave the family unchanged
    return cur;
}

ClosureOperator make_meet_operator(const FiniteSpace& space, const ClosureOperator& cl1,
                                   const ClosureOperator& cl2) {
    ClosureOperator op;
    op.name = "meet(" + cl1.name + "," + cl2.name + ")";
    op.provenance = {{"op", "meet"}, {"left", cl1.name}, {"right", cl2.name}};
    op.universe = space.full_hyperspace();
    op.topological_hint = true;
    op.map = [cl1, cl2](Family f) { return meet_closure(cl1, cl2, f); };
    return op;
}

} // namespace hyperborn
