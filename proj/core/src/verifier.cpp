// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/verifier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hyperborn/errors.hpp"

namespace hyperborn {

namespace {

using nlohmann::json;

std::string fam_str(const FiniteSpace& space, Family f) {
    std::vector<Subset> subs;
    for (Subset s = 0; s <= space.full_set(); ++s)
        if (subset_in(f, s)) subs.push_back(s);
    std::sort(subs.begin(), subs.end(), [](Subset a, Subset b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    std::string out = "{";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i) out += ",";
        out += space.subset_str(subs[i]);
    }
    return out + "}";
}

Family principal_up(const FiniteSpace& space, Subset s) {
    return updown(space, family_with(0, s), UpDown::Up);
}

Family principal_down(const FiniteSpace& space, Subset s) {
    return updown(space, family_with(0, s), UpDown::Down);
}

ClosureOperator reflection_op(const FiniteSpace& space, const ClosureOperator& inner) {
    ClosureOperator op;
    op.name = "reflection(" + inner.name + ")";
    op.provenance = {{"op", "reflection"}, {"inner", inner.name}};
    op.universe = space.full_hyperspace();
    op.topological_hint = true;
    op.map = [inner](Family f) { return idempotent_hull(inner, f).hull; };
    return op;
}

// closure of every family, indexed by the family mask (|X| <= 3 only)
std::vector<Family> op_table(const FiniteSpace& space, const ClosureOperator& op) {
    std::vector<Family> t(static_cast<std::size_t>(space.full_hyperspace()) + 1);
    for (Family f = 0; ; ++f) {
        t[static_cast<std::size_t>(f)] = op(f);
        if (f == space.full_hyperspace()) break;
    }
    return t;
}

// "finer" for closure operators: pointwise smaller closures
bool finer_tables(const std::vector<Family>& a, const std::vector<Family>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!family_subset(a[i], b[i])) return false;
    return true;
}

struct Check {
    CheckResult result;
    explicit Check(std::string id, std::string claim) {
        result.id = std::move(id);
        result.claim = std::move(claim);
    }
    void fail(const FiniteSpace& space, const std::string& what) {
        if (result.pass) {
            result.pass = false;
            result.witness = what;
        }
        (void)space;
    }
    void instance() { ++result.instances; }
    void branch(bool b) { (b ? result.branch_true : result.branch_false)++; }
};

std::string ideal_tag(const SpacePool& sp, const Ideal& s) {
    return sp.name + " S=" + fam_str(*sp.space, s.members());
}

// no two distinct points at distance zero: enlargement arguments that silently
// identify zero-distance points become exact
bool trivial_saturation(const FiniteSpace& space) {
    for (Subset a = 0; a <= space.full_set(); ++a)
        if (space.saturate(a) != a) return false;
    return true;
}

// ---------------------------------------------------------------- checks --

// Opens of the lower reflection are exactly the club-subfamily unions.
CheckResult check_a(const InstancePool& pool) {
    Check c("a-lower-opens",
            "opens of the topological reflection of the lower bornological closure are "
            "exactly the unions of principal up-sets over subfamilies of the ideal "
            "satisfying the existence condition (exhaustive |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            ClosureOperator refl = reflection_op(space, make_cl_born(space, s, Side::Lower));
            std::vector<Family> opens = enumerate_opens(space, refl);
            std::set<Family> lhs(opens.begin(), opens.end());
            std::set<Family> rhs;
            const Family mem = s.members();
            for (Family sub = mem; ; sub = (sub - 1) & mem) {
                if (satisfies_club(space, sub, s)) {
                    Family g = 0;
                    for (Subset m = 0; m <= space.full_set(); ++m)
                        if (subset_in(sub, m)) g |= principal_up(space, m);
                    rhs.insert(g);
                }
                if (sub == 0) break;
            }
            if (lhs != rhs) {
                c.fail(space, ideal_tag(sp, s) + " reflection opens differ from the "
                                                "club-subfamily unions");
                return c.result;
            }
        }
    }
    return c.result;
}

// star_ideal is the largest shrink-stable sub-ideal, and shrink-stability of a
// sub-ideal coincides with topologicality of its lower bornological closure.
CheckResult check_b(const InstancePool& pool) {
    Check c("b-star-maximal",
            "the iterated-shrink fixpoint ideal is shrink-stable, reached within |S| "
            "steps, contains every shrink-stable sub-ideal, and a sub-ideal is "
            "shrink-stable exactly when its lower bornological closure is idempotent "
            "(sub-ideal enumeration at |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            StarResult st = star_ideal(space, s);
            if (!(hat_ideal(space, st.ideal) == st.ideal) ||
                st.iterations > family_size(s.members()) ||
                !family_subset(st.ideal.members(), s.members())) {
                c.fail(space, ideal_tag(sp, s) + " fixpoint ideal violated its contract");
                return c.result;
            }
            if (!sp.exhaustive) continue;
            for (const Ideal& sub : enumerate_sub_ideals(space, s)) {
                bool stable = hat_ideal(space, sub) == sub;
                bool topo = is_topological(space, make_cl_born(space, sub, Side::Lower),
                                           Scope::Exhaustive)
                                .topological;
                c.branch(stable);
                if (stable != topo) {
                    c.fail(space, ideal_tag(sp, sub) +
                                      " shrink-stability disagrees with idempotency");
                    return c.result;
                }
                if (stable && !family_subset(sub.members(), st.ideal.members())) {
                    c.fail(space, ideal_tag(sp, sub) +
                                      " is shrink-stable but escapes the fixpoint ideal");
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// cl_born(lower,S) finer than cl_born(lower,S') iff S' is inside tb_hull(S).
CheckResult check_c(const InstancePool& pool) {
    Check c("c-lower-finer-tb",
            "if the lower bornological closure of S refines that of S' then every "
            "member of S' is approximable by S-members at every enlargement scale; on "
            "spaces without zero-distance pairs this is an equivalence and the closure "
            "of the approximable hull coincides with that of S (all ideal pairs, "
            "|X|<=3; the converse fails on pseudometric spaces once the empty set is a "
            "hyperspace point)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        const bool exact = trivial_saturation(space);
        std::vector<std::vector<Family>> tables;
        for (const Ideal& s : sp.all_ideals)
            tables.push_back(op_table(space, make_cl_born(space, s, Side::Lower)));
        for (std::size_t i = 0; i < sp.all_ideals.size(); ++i) {
            const Ideal tb = tb_hull(space, sp.all_ideals[i]);
            if (exact &&
                op_table(space, make_cl_born(space, tb, Side::Lower)) != tables[i]) {
                c.fail(space, ideal_tag(sp, sp.all_ideals[i]) +
                                  " approximable hull changes the closure");
                return c.result;
            }
            for (std::size_t j = 0; j < sp.all_ideals.size(); ++j) {
                c.instance();
                bool finer = finer_tables(tables[i], tables[j]);
                bool inside = family_subset(sp.all_ideals[j].members(), tb.members());
                c.branch(finer);
                if ((finer && !inside) || (exact && finer != inside)) {
                    c.fail(space, ideal_tag(sp, sp.all_ideals[i]) + " vs S'=" +
                                      fam_str(space, sp.all_ideals[j].members()));
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// If the lower reflection closure is bornological at all, its ideal is S^-.
CheckResult check_d(const InstancePool& pool) {
    Check c("d-minus-consistency",
            "whenever the lower reflection closure equals a lower bornological closure "
            "for some ideal, it equals the one derived from the approximable-hull "
            "fixpoint ideal (ideal scan at |X|<=3, spaces without zero-distance pairs; "
            "the zero-distance pair with S generated by one point of its zero class is "
            "a counterexample otherwise)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive || !trivial_saturation(*sp.space)) continue;
        const FiniteSpace& space = *sp.space;
        std::vector<std::vector<Family>> tables;
        for (const Ideal& s : sp.all_ideals)
            tables.push_back(op_table(space, make_cl_born(space, s, Side::Lower)));
        for (const Ideal& s : sp.all_ideals) {
            c.instance();
            std::vector<Family> refl =
                op_table(space, reflection_op(space, make_cl_born(space, s, Side::Lower)));
            bool found = false;
            for (std::size_t j = 0; j < sp.all_ideals.size(); ++j)
                if (tables[j] == refl) { found = true; break; }
            c.branch(found);
            if (found) {
                const Ideal minus = minus_ideal(space, s);
                if (op_table(space, make_cl_born(space, minus, Side::Lower)) != refl) {
                    c.fail(space, ideal_tag(sp, s) +
                                      " reflection is bornological but not via S^-");
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// Every constructed closure operator satisfies the Cech axioms.
CheckResult check_e(const InstancePool& pool) {
    Check c("e-cech-axioms",
            "every constructed closure operator (metric, bornological, trace, lower and "
            "upper modifications) is expansive, monotone, finitely additive and fixes "
            "the empty family; exhaustive at |X|<=3, sampled at |X|=4");
    for (const SpacePool& sp : pool.pools) {
        const FiniteSpace& space = *sp.space;
        std::vector<ClosureOperator> ops;
        for (Side side : {Side::Lower, Side::Upper, Side::Both})
            ops.push_back(make_cl_metric(space, side));
        for (const Ideal& s : sp.ideals) {
            for (Side side : {Side::Lower, Side::Upper, Side::Both})
                ops.push_back(make_cl_born(space, s, side));
            ops.push_back(make_cl_tau(space, s));
            for (const HyperTopology& t : sp.lower_topos)
                ops.push_back(make_cl_lower_mod(space, t, s));
            for (const HyperTopology& t : sp.upper_topos)
                ops.push_back(make_cl_upper_mod(space, t, s));
        }
        for (const ClosureOperator& op : ops) {
            c.instance();
            CechReport r = sp.exhaustive
                               ? cech_validate(space, op, Scope::Exhaustive)
                               : cech_validate(space, op, Scope::Sampled, pool.trials,
                                               pool.seed);
            if (!r.all_pass()) {
                for (const auto& ax : r.axioms)
                    if (!ax.pass)
                        c.fail(space, sp.name + " " + op.name + " fails axiom '" +
                                          ax.axiom + "' at " +
                                          fam_str(space, ax.witness->first));
                return c.result;
            }
        }
    }
    return c.result;
}

// Lower-modification refinement criterion.
CheckResult check_f(const InstancePool& pool) {
    Check c("f-lower-mod-finer",
            "for a lower topology T the modification by S refines the modification by "
            "S* exactly when every member of S* lies in the T-closure of its bounded "
            "subsets from S (all ideal pairs, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.lower_topos) {
            std::vector<std::vector<Family>> tables;
            for (const Ideal& s : sp.all_ideals)
                tables.push_back(op_table(space, make_cl_lower_mod(space, t, s)));
            for (std::size_t i = 0; i < sp.all_ideals.size(); ++i) {
                for (std::size_t j = 0; j < sp.all_ideals.size(); ++j) {
                    c.instance();
                    bool finer = finer_tables(tables[i], tables[j]);
                    bool crit = true;
                    for (Subset m = 0; crit && m <= space.full_set(); ++m) {
                        if (!sp.all_ideals[j].contains(m)) continue;
                        Family bounded_in = 0;
                        for (Subset b = 0; b <= space.full_set(); ++b)
                            if (sp.all_ideals[i].contains(b) && (b & ~m) == 0)
                                bounded_in = family_with(bounded_in, b);
                        if (!subset_in(t.cl(bounded_in), m)) crit = false;
                    }
                    c.branch(finer);
                    if (finer != crit) {
                        c.fail(space, sp.name + " T=" + t.name + " S=" +
                                          fam_str(space, sp.all_ideals[i].members()) +
                                          " S*=" +
                                          fam_str(space, sp.all_ideals[j].members()));
                        return c.result;
                    }
                }
            }
        }
    }
    return c.result;
}

// Trace closure: bracket-neighbourhood route and directed-family shortcuts.
CheckResult check_g(const InstancePool& pool) {
    Check c("g-tau-closure",
            "the trace closure computed from equality of traces agrees with the "
            "closure of the bracket-base topology, and collapses to the one-sided "
            "inclusion tests on downward/upward directed families (|X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            std::vector<Subset> mem;
            for (Subset m = 0; m <= space.full_set(); ++m)
                if (s.contains(m)) mem.push_back(m);
            for (Family f = 0; ; ++f) {
                Family tau = cl_tau(space, s, f);
                // independent route: every base bracket around A must meet f
                Family viaBase = 0;
                for (Subset a = 0; a <= space.full_set(); ++a) {
                    bool in = f != 0;
                    for (Subset s1 : mem) {
                        if ((s1 & ~a) != 0) continue;
                        for (Subset s2 : mem) {
                            if ((a & s2) != 0) continue;
                            bool meets = false;
                            for (Subset b = 0; !meets && b <= space.full_set(); ++b)
                                if (subset_in(f, b) && (s1 & ~b) == 0 && (b & s2) == 0)
                                    meets = true;
                            if (!meets) { in = false; break; }
                        }
                        if (!in) break;
                    }
                    if (in) viaBase = family_with(viaBase, a);
                }
                if (tau != viaBase) {
                    c.fail(space, ideal_tag(sp, s) + " bracket route differs at " +
                                      fam_str(space, f));
                    return c.result;
                }
                bool down = updown(space, f, UpDown::Down) == f;
                bool up = updown(space, f, UpDown::Up) == f;
                if ((down || up) && f != 0) {
                    Family lemma = 0;
                    for (Subset a = 0; a <= space.full_set(); ++a) {
                        bool in = true;
                        for (Subset m : mem) {
                            bool ok = false;
                            for (Subset b = 0; !ok && b <= space.full_set(); ++b) {
                                if (!subset_in(f, b)) continue;
                                if (down ? ((a & m & ~b) == 0) : (((b & m) & ~a) == 0))
                                    ok = true;
                            }
                            if (!ok) { in = false; break; }
                        }
                        if (in) lemma = family_with(lemma, a);
                    }
                    if (tau != lemma) {
                        c.fail(space, ideal_tag(sp, s) + " directed-family shortcut "
                                                        "differs at " +
                                          fam_str(space, f));
                        return c.result;
                    }
                }
                if (f == space.full_hyperspace()) break;
            }
        }
    }
    return c.result;
}

// Factorization of the lower modification through the trace closure.
CheckResult check_h(const InstancePool& pool) {
    Check c("h-factorization",
            "for every lower topology T the modification by S equals the trace closure "
            "applied after the T-closure, on every family (|X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.lower_topos) {
            for (const Ideal& s : sp.ideals) {
                c.instance();
                for (Family f = 0; ; ++f) {
                    if (cl_lower_mod(space, t, s, f) != cl_tau(space, s, t.cl(f))) {
                        c.fail(space, sp.name + " T=" + t.name + " S=" +
                                          fam_str(space, s.members()) + " at " +
                                          fam_str(space, f));
                        return c.result;
                    }
                    if (f == space.full_hyperspace()) break;
                }
            }
        }
    }
    return c.result;
}

// Lower modification topological iff trace closure preserves T-closedness.
CheckResult check_i(const InstancePool& pool) {
    Check c("i-topological-closedness",
            "the lower modification is idempotent exactly when the trace closure maps "
            "T-closed families to T-closed families (|X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.lower_topos) {
            for (const Ideal& s : sp.ideals) {
                c.instance();
                bool topo = is_topological(space, make_cl_lower_mod(space, t, s),
                                           Scope::Exhaustive)
                                .topological;
                bool preserves = true;
                for (Family f = 0; ; ++f) {
                    if (t.closed_in(f)) {
                        Family cs = cl_tau(space, s, f);
                        if (!t.closed_in(cs)) { preserves = false; break; }
                    }
                    if (f == space.full_hyperspace()) break;
                }
                c.branch(topo);
                if (topo != preserves) {
                    c.fail(space, sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()));
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// Reflection of the modification equals the meet with the trace topology.
CheckResult check_j(const InstancePool& pool) {
    Check c("j-reflection-meet",
            "the idempotent hull of the lower/upper modification agrees with the "
            "alternating meet of T and the trace topology, for T among the metric "
            "topologies and the topology pool (|X|<=3 exhaustive, |X|=4 sampled)");
    for (const SpacePool& sp : pool.pools) {
        const FiniteSpace& space = *sp.space;
        std::mt19937_64 rng(pool.seed);
        std::vector<Family> fams;
        if (sp.exhaustive) {
            for (Family f = 0; ; ++f) {
                fams.push_back(f);
                if (f == space.full_hyperspace()) break;
            }
        } else {
            for (int i = 0; i < 50; ++i) fams.push_back(rng() & space.full_hyperspace());
        }
        for (const Ideal& s : sp.ideals) {
            HyperTopology tau = make_tau_topology(space, s);
            std::vector<std::pair<ClosureOperator, const HyperTopology*>> cases;
            if (sp.exhaustive) {
                for (const HyperTopology& t : sp.lower_topos)
                    cases.push_back({make_cl_lower_mod(space, t, s), &t});
                for (const HyperTopology& t : sp.miss_topos)
                    cases.push_back({make_cl_upper_mod(space, t, s), &t});
            }
            // the metric instances: the bornological closures themselves
            HyperTopology hm = make_metric_topology(space, Side::Lower);
            HyperTopology hp = make_metric_topology(space, Side::Upper);
            cases.push_back({make_cl_born(space, s, Side::Lower), &hm});
            cases.push_back({make_cl_born(space, s, Side::Upper), &hp});
            for (const auto& [inner, t] : cases) {
                c.instance();
                ClosureOperator meet = make_meet_operator(space, t->cl, tau.cl);
                ClosureOperator refl = reflection_op(space, inner);
                for (Family f : fams) {
                    if (refl(f) != meet(f)) {
                        c.fail(space, sp.name + " T=" + t->name + " S=" +
                                          fam_str(space, s.members()) + " at " +
                                          fam_str(space, f));
                        return c.result;
                    }
                }
            }
        }
    }
    return c.result;
}

// helper: closure table is boundedly generated w.r.t. s
bool boundedly_generated(const FiniteSpace& space, const Ideal& s,
                         const std::vector<Family>& table) {
    for (std::size_t fi = 0; fi < table.size(); ++fi) {
        Family cl = table[fi];
        for (Subset a = 0; a <= space.full_set(); ++a) {
            bool all_bounded_in = true;
            for (Subset m = 0; m <= space.full_set(); ++m)
                if (s.contains(m) && (m & ~a) == 0 && !subset_in(cl, m)) {
                    all_bounded_in = false;
                    break;
                }
            if (subset_in(cl, a) != all_bounded_in) return false;
        }
    }
    return true;
}

// The meet topology is the finest boundedly generated topology coarser than T.
CheckResult check_k(const InstancePool& pool) {
    Check c("k-boundedly-generated",
            "the meet of a lower topology T with the trace topology is boundedly "
            "generated and refines every boundedly generated candidate topology "
            "coarser than T (sampled-universality over the topology pool, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.lower_topos) {
            std::vector<Family> t_opens = enumerate_opens(space, t.cl);
            for (const Ideal& s : sp.ideals) {
                c.instance();
                HyperTopology tau = make_tau_topology(space, s);
                ClosureOperator meet = make_meet_operator(space, t.cl, tau.cl);
                std::vector<Family> table = op_table(space, meet);
                if (!boundedly_generated(space, s, table)) {
                    c.fail(space, sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()) +
                                      " meet is not boundedly generated");
                    return c.result;
                }
                std::vector<Family> meet_opens = enumerate_opens(space, meet);
                for (const HyperTopology& cand : sp.lower_topos) {
                    std::vector<Family> cand_opens = enumerate_opens(space, cand.cl);
                    bool coarser = true;
                    for (Family g : cand_opens)
                        if (std::find(t_opens.begin(), t_opens.end(), g) ==
                            t_opens.end()) { coarser = false; break; }
                    if (!coarser) continue;
                    if (!boundedly_generated(space, s, op_table(space, cand.cl)))
                        continue;
                    c.branch(true);
                    for (Family g : cand_opens)
                        if (std::find(meet_opens.begin(), meet_opens.end(), g) ==
                            meet_opens.end()) {
                            c.fail(space, sp.name + " candidate " + cand.name +
                                              " beats the meet for S=" +
                                              fam_str(space, s.members()));
                            return c.result;
                        }
                }
            }
        }
    }
    return c.result;
}

// Opens of the upper reflection are stable unions of cobounded down-sets.
CheckResult check_l(const InstancePool& pool) {
    Check c("l-upper-opens",
            "opens of the topological reflection of the upper bornological closure are "
            "exactly the unions of principal down-sets over collections of cobounded "
            "sets stable under small enlargements (exhaustive |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            ClosureOperator refl = reflection_op(space, make_cl_born(space, s, Side::Upper));
            std::vector<Family> opens = enumerate_opens(space, refl);
            std::set<Family> lhs(opens.begin(), opens.end());
            std::set<Family> rhs;
            const Family cob = cobounded_family(space, s);
            for (Family sub = cob; ; sub = (sub - 1) & cob) {
                if (stable_under_small_enlargements(space, sub)) {
                    Family g = 0;
                    for (Subset m = 0; m <= space.full_set(); ++m)
                        if (subset_in(sub, m)) g |= principal_down(space, m);
                    rhs.insert(g);
                }
                if (sub == 0) break;
            }
            if (lhs != rhs) {
                c.fail(space, ideal_tag(sp, s) +
                                  " upper reflection opens differ from the stable "
                                  "cobounded unions");
                return c.result;
            }
        }
    }
    return c.result;
}

// The upper reflection is the finest miss topology under H+ with dense
// cobounded sets.
CheckResult check_m(const InstancePool& pool) {
    Check c("m-finest-miss",
            "the upper reflection is a miss topology in which the cobounded sets are "
            "dense, and it refines every pool miss topology contained in the upper "
            "metric topology with dense cobounded sets (sampled-universality, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        std::vector<Family> hplus_opens =
            enumerate_opens(space, make_cl_metric(space, Side::Upper));
        for (const Ideal& s : sp.ideals) {
            c.instance();
            HyperTopology refl;
            refl.name = "H+(S)";
            refl.cl = reflection_op(space, make_cl_born(space, s, Side::Upper));
            const Family cob = cobounded_family(space, s);
            if (!is_miss_topology(space, refl)) {
                c.fail(space, ideal_tag(sp, s) + " upper reflection is not a miss "
                                                "topology");
                return c.result;
            }
            if (refl.cl(cob) != space.full_hyperspace()) {
                c.fail(space, ideal_tag(sp, s) + " cobounded sets are not dense in the "
                                                "upper reflection");
                return c.result;
            }
            std::vector<Family> refl_opens = enumerate_opens(space, refl.cl);
            for (const HyperTopology& cand : sp.miss_topos) {
                std::vector<Family> cand_opens = enumerate_opens(space, cand.cl);
                bool under = true;
                for (Family g : cand_opens)
                    if (std::find(hplus_opens.begin(), hplus_opens.end(), g) ==
                        hplus_opens.end()) { under = false; break; }
                if (!under || cand.cl(cob) != space.full_hyperspace()) continue;
                c.branch(true);
                for (Family g : cand_opens)
                    if (std::find(refl_opens.begin(), refl_opens.end(), g) ==
                        refl_opens.end()) {
                        c.fail(space, ideal_tag(sp, s) + " candidate " + cand.name +
                                          " beats the upper reflection");
                        return c.result;
                    }
            }
        }
    }
    return c.result;
}

// Upper reflection closure equals the upper closure of the enlargement-stable
// part of the ideal.
CheckResult check_n(const InstancePool& pool) {
    Check c("n-upper-reflection-plus",
            "the closure operator of the upper reflection equals the upper "
            "bornological closure taken over the members with some enlargement still "
            "bounded (every family, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            const Ideal plus = plus_ideal(space, s);
            ClosureOperator refl = reflection_op(space, make_cl_born(space, s, Side::Upper));
            for (Family f = 0; ; ++f) {
                if (refl(f) != cl_born(space, plus, Side::Upper, f)) {
                    c.fail(space, ideal_tag(sp, s) + " at " + fam_str(space, f));
                    return c.result;
                }
                if (f == space.full_hyperspace()) break;
            }
        }
    }
    return c.result;
}

// S^+ is stable, and upper topologicality is equivalent to stability.
CheckResult check_o(const InstancePool& pool) {
    Check c("o-plus-stable",
            "the enlargement-stable part of any ideal is itself stable under small "
            "enlargements, and the upper bornological closure is idempotent exactly "
            "when the ideal is stable");
    for (const SpacePool& sp : pool.pools) {
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            c.instance();
            const Ideal plus = plus_ideal(space, s);
            if (!stable_under_small_enlargements(space, plus.members())) {
                c.fail(space, ideal_tag(sp, s) + " S^+ is not stable");
                return c.result;
            }
            if (!sp.exhaustive) continue;
            bool stable = stable_under_small_enlargements(space, s.members());
            bool topo = is_topological(space, make_cl_born(space, s, Side::Upper),
                                       Scope::Exhaustive)
                            .topological;
            c.branch(stable);
            if (stable != topo) {
                c.fail(space, ideal_tag(sp, s) + " stability disagrees with "
                                                "idempotency");
                return c.result;
            }
        }
    }
    return c.result;
}

// Sandwich inclusions for the upper modification.
CheckResult check_p(const InstancePool& pool) {
    Check c("p-sandwich",
            "for an upper topology the modification contains the T-closure of the "
            "trace closure, and for a miss topology it is contained in the trace "
            "closure of the T-closure (every family, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const Ideal& s : sp.ideals) {
            for (const HyperTopology& t : sp.upper_topos) {
                c.instance();
                const bool miss = t.miss;
                for (Family f = 0; ; ++f) {
                    Family mod = cl_upper_mod(space, t, s, f);
                    if (!family_subset(t.cl(cl_tau(space, s, f)), mod) ||
                        (miss && !family_subset(mod, cl_tau(space, s, t.cl(f))))) {
                        c.fail(space, sp.name + " T=" + t.name + " S=" +
                                          fam_str(space, s.members()) + " at " +
                                          fam_str(space, f));
                        return c.result;
                    }
                    if (f == space.full_hyperspace()) break;
                }
            }
        }
    }
    return c.result;
}

// Upper-modification refinement criterion.
CheckResult check_q(const InstancePool& pool) {
    Check c("q-upper-mod-finer",
            "for a miss topology T the modification by S refines the modification by "
            "S* exactly when, for each member of S*, the empty set lies in the "
            "T-closure of its differences with S-members; for a general upper topology "
            "only the forward implication holds (all ideal pairs, |X|<=3; the "
            "equivalence needs the principal down-set base)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.upper_topos) {
            const bool is_miss = t.miss;
            std::vector<std::vector<Family>> tables;
            for (const Ideal& s : sp.all_ideals)
                tables.push_back(op_table(space, make_cl_upper_mod(space, t, s)));
            for (std::size_t i = 0; i < sp.all_ideals.size(); ++i) {
                for (std::size_t j = 0; j < sp.all_ideals.size(); ++j) {
                    c.instance();
                    bool finer = finer_tables(tables[i], tables[j]);
                    bool crit = true;
                    for (Subset ms = 0; crit && ms <= space.full_set(); ++ms) {
                        if (!sp.all_ideals[j].contains(ms)) continue;
                        Family diffs = 0;
                        for (Subset m = 0; m <= space.full_set(); ++m)
                            if (sp.all_ideals[i].contains(m))
                                diffs = family_with(diffs, ms & ~m);
                        if (!subset_in(t.cl(diffs), 0)) crit = false;
                    }
                    c.branch(finer);
                    if ((finer && !crit) || (is_miss && finer != crit)) {
                        c.fail(space, sp.name + " T=" + t.name + " S=" +
                                          fam_str(space, sp.all_ideals[i].members()) +
                                          " S*=" +
                                          fam_str(space, sp.all_ideals[j].members()));
                        return c.result;
                    }
                }
            }
        }
    }
    return c.result;
}

// helper: is the principal down-set of c a T-neighbourhood of a?
bool down_nbhd(const FiniteSpace& space, const HyperTopology& t, Subset c, Subset a) {
    if ((a & ~c) != 0) return false;
    Family down = principal_down(space, c);
    return !subset_in(t.cl(space.family_complement(down)), a);
}

// Upper topologicality, cobounded-lift form.
CheckResult check_r(const InstancePool& pool) {
    Check c("r-topological-cobounded-lift",
            "for a miss topology T the modification is idempotent exactly when every "
            "cobounded down-set neighbourhood of a set is also a neighbourhood of some "
            "cobounded superset of that set (|X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.miss_topos) {
            for (const Ideal& s : sp.ideals) {
                c.instance();
                bool topo = is_topological(space, make_cl_upper_mod(space, t, s),
                                           Scope::Exhaustive)
                                .topological;
                bool lift = true;
                for (Subset cs = 0; lift && cs <= space.full_set(); ++cs) {
                    if (!s.contains(space.full_set() & ~cs)) continue; // cs cobounded
                    for (Subset a = 0; a <= space.full_set(); ++a) {
                        if (!down_nbhd(space, t, cs, a)) continue;
                        bool found = false;
                        for (Subset cp = 0; !found && cp <= space.full_set(); ++cp)
                            if (s.contains(space.full_set() & ~cp) && (a & ~cp) == 0 &&
                                down_nbhd(space, t, cs, cp))
                                found = true;
                        if (!found) { lift = false; break; }
                    }
                }
                c.branch(topo);
                if (topo != lift) {
                    c.fail(space, sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()));
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// Upper topologicality, hit-intersection form.
CheckResult check_s(const InstancePool& pool) {
    Check c("s-topological-hit-intersection",
            "for a miss topology T the modification is idempotent exactly when the "
            "T-closure of every bounded hit-family is an intersection of bounded "
            "hit-families (|X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.miss_topos) {
            for (const Ideal& s : sp.ideals) {
                c.instance();
                bool topo = is_topological(space, make_cl_upper_mod(space, t, s),
                                           Scope::Exhaustive)
                                .topological;
                bool inter = true;
                for (Subset m = 0; inter && m <= space.full_set(); ++m) {
                    if (!s.contains(m)) continue;
                    Family h = t.cl(hit_family(space, m));
                    Family cap = space.full_hyperspace();
                    for (Subset mp = 0; mp <= space.full_set(); ++mp) {
                        if (!s.contains(mp)) continue;
                        Family hp = hit_family(space, mp);
                        if (family_subset(h, hp)) cap &= hp;
                    }
                    if (cap != h) inter = false;
                }
                c.branch(topo);
                if (topo != inter) {
                    c.fail(space, sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()));
                    return c.result;
                }
            }
        }
    }
    return c.result;
}

// helper: closure table is coboundedly generated w.r.t. s
bool coboundedly_generated(const FiniteSpace& space, const Ideal& s,
                           const std::vector<Family>& table) {
    for (std::size_t fi = 0; fi < table.size(); ++fi) {
        Family cl = table[fi];
        for (Subset a = 0; a <= space.full_set(); ++a) {
            bool all_cob_in = true;
            for (Subset cs = 0; cs <= space.full_set(); ++cs)
                if (s.contains(space.full_set() & ~cs) && (a & ~cs) == 0 &&
                    !subset_in(cl, cs)) {
                    all_cob_in = false;
                    break;
                }
            if (subset_in(cl, a) != all_cob_in) return false;
        }
    }
    return true;
}

// Meet with the trace topology is the finest coboundedly generated topology
// coarser than an upper topology.
CheckResult check_t(const InstancePool& pool) {
    Check c("t-coboundedly-generated",
            "the meet of an upper topology T with the trace topology is coboundedly "
            "generated and refines every coboundedly generated candidate topology "
            "coarser than T (sampled-universality over the topology pool, |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        for (const HyperTopology& t : sp.upper_topos) {
            std::vector<Family> t_opens = enumerate_opens(space, t.cl);
            for (const Ideal& s : sp.ideals) {
                c.instance();
                HyperTopology tau = make_tau_topology(space, s);
                ClosureOperator meet = make_meet_operator(space, t.cl, tau.cl);
                std::vector<Family> table = op_table(space, meet);
                if (!coboundedly_generated(space, s, table)) {
                    c.fail(space, sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()) +
                                      " meet is not coboundedly generated");
                    return c.result;
                }
                std::vector<Family> meet_opens = enumerate_opens(space, meet);
                for (const HyperTopology& cand : sp.upper_topos) {
                    std::vector<Family> cand_opens = enumerate_opens(space, cand.cl);
                    bool coarser = true;
                    for (Family g : cand_opens)
                        if (std::find(t_opens.begin(), t_opens.end(), g) ==
                            t_opens.end()) { coarser = false; break; }
                    if (!coarser) continue;
                    if (!coboundedly_generated(space, s, op_table(space, cand.cl)))
                        continue;
                    c.branch(true);
                    for (Family g : cand_opens)
                        if (std::find(meet_opens.begin(), meet_opens.end(), g) ==
                            meet_opens.end()) {
                            c.fail(space, sp.name + " candidate " + cand.name +
                                              " beats the meet for S=" +
                                              fam_str(space, s.members()));
                            return c.result;
                        }
                }
            }
        }
    }
    return c.result;
}

// Two-sided reflection opens via bracket uniform neighbourhoods.
CheckResult check_u(const InstancePool& pool) {
    Check c("u-two-sided-opens",
            "every open collection of the two-sided reflection places each of its "
            "members in a bracket of a bounded set against an enlarged bounded set "
            "whose Hausdorff blow-up at the same radius stays inside the collection "
            "(exhaustive |X|<=3); the converse is tallied in the branch counters and "
            "fails in this model, first at a degenerate bracket over the empty set");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        // Hausdorff distance of every pair of subsets
        std::vector<std::vector<ExtRat>> hd(space.hyper_size(),
                                            std::vector<ExtRat>(space.hyper_size()));
        for (Subset a = 0; a <= space.full_set(); ++a)
            for (Subset b = 0; b <= space.full_set(); ++b)
                hd[a][b] = hausdorff(space, a, b);
        for (const Ideal& s : sp.ideals) {
            c.instance();
            ClosureOperator refl = reflection_op(space, make_cl_born(space, s, Side::Both));
            // candidate brackets with their Hausdorff blow-up at the same radius
            std::vector<std::pair<Family, Family>> brackets;
            for (Subset sp1 = 0; sp1 <= space.full_set(); ++sp1) {
                if (!s.contains(sp1)) continue;
                for (Subset s2 = 0; s2 <= space.full_set(); ++s2) {
                    if (!s.contains(s2)) continue;
                    for (const Rat& eps : space.band_reps()) {
                        Family br = bracket_family(space, sp1, enlarge(space, s2, eps));
                        Family blow = 0;
                        for (Subset cs = 0; cs <= space.full_set(); ++cs) {
                            if (!subset_in(br, cs)) continue;
                            for (Subset b = 0; b <= space.full_set(); ++b)
                                if (hd[cs][b] < ExtRat(eps)) blow = family_with(blow, b);
                        }
                        brackets.push_back({br, blow});
                    }
                }
            }
            for (Family g = 0; ; ++g) {
                bool lhs = is_open(space, refl, g);
                bool rhs = true;
                for (Subset a = 0; rhs && a <= space.full_set(); ++a) {
                    if (!subset_in(g, a)) continue;
                    bool ok = false;
                    for (const auto& [br, blow] : brackets)
                        if (subset_in(br, a) && family_subset(blow, g)) { ok = true; break; }
                    if (!ok) rhs = false;
                }
                if (rhs) c.branch(lhs);
                if (lhs && !rhs) {
                    c.fail(space, ideal_tag(sp, s) + " at " + fam_str(space, g));
                    return c.result;
                }
                if (g == space.full_hyperspace()) break;
            }
        }
    }
    return c.result;
}

// If the two-sided reflection closure is bornological, its ideal is S^+.
CheckResult check_v(const InstancePool& pool) {
    Check c("v-two-sided-bornological",
            "whenever the two-sided reflection closure equals a two-sided bornological "
            "closure for some ideal, that ideal is the enlargement-stable part "
            "(ideal scan at |X|<=3)");
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        std::vector<std::vector<Family>> tables;
        for (const Ideal& s : sp.all_ideals)
            tables.push_back(op_table(space, make_cl_born(space, s, Side::Both)));
        for (const Ideal& s : sp.all_ideals) {
            c.instance();
            std::vector<Family> refl =
                op_table(space, reflection_op(space, make_cl_born(space, s, Side::Both)));
            const Ideal plus = plus_ideal(space, s);
            bool found = false;
            for (std::size_t j = 0; j < sp.all_ideals.size(); ++j) {
                if (tables[j] != refl) continue;
                found = true;
                if (!(sp.all_ideals[j] == plus)) {
                    c.fail(space, ideal_tag(sp, s) + " reflection is bornological via " +
                                      fam_str(space, sp.all_ideals[j].members()) +
                                      " which is not S^+");
                    return c.result;
                }
            }
            c.branch(found);
        }
    }
    return c.result;
}

// Quantifier-elimination cross-checks: grid enlargements, full-band and
// full-member quantification against the production shortcuts.
CheckResult check_w(const InstancePool& pool) {
    Check c("w-grid-oracle",
            "a 1/64-step rational grid of enlargements computed by raw distance "
            "comparison matches the band representatives pointwise, and closures and "
            "derived ideals computed with full member and full band quantification "
            "match the maximal-member sub-minimal-band shortcuts (|X|<=3)");
    constexpr int kGridQ = 64;
    for (const SpacePool& sp : pool.pools) {
        if (!sp.exhaustive) continue;
        const FiniteSpace& space = *sp.space;
        // (1) independent grid enlargement vs the band machinery
        Rat top = space.critical_bands().empty() ? Rat(1)
                                                 : space.critical_bands().back() + Rat(1);
        std::vector<Rat> grid;
        for (Rat eps(1, kGridQ); eps <= top; eps = eps + Rat(1, kGridQ)) grid.push_back(eps);
        for (Subset a = 0; a <= space.full_set(); ++a) {
            for (const Rat& eps : grid) {
                Subset raw = 0;
                for (int x = 0; x < space.size(); ++x) {
                    for (int y = 0; y < space.size(); ++y)
                        if (((a >> y) & 1u) && space.dist(x, y) < eps) {
                            raw |= Subset{1} << x;
                            break;
                        }
                }
                if (raw != enlarge(space, a, eps)) {
                    c.fail(space, sp.name + " enlargement of " + space.subset_str(a) +
                                      " at " + eps.str());
                    return c.result;
                }
            }
        }
        const auto& bands = space.band_reps();
        for (const Ideal& s : sp.ideals) {
            c.instance();
            std::vector<Subset> mem;
            for (Subset m = 0; m <= space.full_set(); ++m)
                if (s.contains(m)) mem.push_back(m);
            // (2) closures with full members and all band representatives
            for (Family f = 0; ; ++f) {
                for (Side side : {Side::Lower, Side::Upper, Side::Both}) {
                    Family full = 0;
                    for (Subset a = 0; a <= space.full_set(); ++a) {
                        bool in = true;
                        for (Subset m : mem) {
                            for (const Rat& eps : bands) {
                                bool found = false;
                                for (Subset b = 0; !found && b <= space.full_set(); ++b) {
                                    if (!subset_in(f, b)) continue;
                                    bool lo = ((a & m) & ~enlarge(space, b, eps)) == 0;
                                    bool up = ((b & m) & ~enlarge(space, a, eps)) == 0;
                                    found = side == Side::Lower   ? lo
                                            : side == Side::Upper ? up
                                                                  : (lo && up);
                                }
                                if (!found) { in = false; break; }
                            }
                            if (!in) break;
                        }
                        if (in) full = family_with(full, a);
                    }
                    if (full != cl_born(space, s, side, f)) {
                        c.fail(space, ideal_tag(sp, s) + " " + side_str(side) +
                                          " closure shortcut differs at " +
                                          fam_str(space, f));
                        return c.result;
                    }
                }
                if (f == space.full_hyperspace()) break;
            }
            // (3) derived ideals with all band representatives
            const Ideal tb = tb_hull(space, s);
            const Ideal plus = plus_ideal(space, s);
            const Ideal hat = hat_ideal(space, s);
            for (Subset a = 0; a <= space.full_set(); ++a) {
                bool tb_full = true;
                for (const Rat& eps : bands) {
                    bool covered = false;
                    for (Subset m : mem)
                        if ((a & ~enlarge(space, m, eps)) == 0) { covered = true; break; }
                    if (!covered) { tb_full = false; break; }
                }
                bool plus_full = false;
                if (s.contains(a))
                    for (const Rat& eps : bands)
                        if (s.contains(enlarge(space, a, eps))) { plus_full = true; break; }
                bool hat_full = false;
                if (s.contains(a)) {
                    hat_full = true;
                    for (const Rat& eps : bands) {
                        bool exists_delta = false;
                        for (const Rat& delta : bands) {
                            bool all_b = true;
                            for (Subset b = 0; b <= space.full_set(); ++b) {
                                if ((a & ~enlarge(space, b, delta)) != 0) continue;
                                bool witness = false;
                                for (Subset m : mem)
                                    if ((m & ~b) == 0 &&
                                        (a & ~enlarge(space, m, eps)) == 0) {
                                        witness = true;
                                        break;
                                    }
                                if (!witness) { all_b = false; break; }
                            }
                            if (all_b) { exists_delta = true; break; }
                        }
                        if (!exists_delta) { hat_full = false; break; }
                    }
                }
                if (tb_full != tb.contains(a) || plus_full != plus.contains(a) ||
                    hat_full != hat.contains(a)) {
                    c.fail(space, ideal_tag(sp, s) + " derived-ideal shortcut differs "
                                                    "at " +
                                      space.subset_str(a));
                    return c.result;
                }
            }
            // (4) the existence condition over all band representatives
            const Family memf = s.members();
            for (Family sub = memf; ; sub = (sub - 1) & memf) {
                bool full = true;
                for (Subset m0 = 0; full && m0 <= space.full_set(); ++m0) {
                    if (!subset_in(sub, m0)) continue;
                    bool exists_eps = false;
                    for (const Rat& eps : bands) {
                        bool all_b = true;
                        for (Subset b = 0; b <= space.full_set(); ++b) {
                            if ((m0 & ~enlarge(space, b, eps)) != 0) continue;
                            bool witness = false;
                            for (Subset m = 0; m <= space.full_set(); ++m)
                                if (subset_in(sub, m) && (m & ~b) == 0) {
                                    witness = true;
                                    break;
                                }
                            if (!witness) { all_b = false; break; }
                        }
                        if (all_b) { exists_eps = true; break; }
                    }
                    if (!exists_eps) full = false;
                }
                if (full != satisfies_club(space, sub, s)) {
                    c.fail(space, ideal_tag(sp, s) + " existence-condition shortcut "
                                                    "differs for subfamily " +
                                      fam_str(space, sub));
                    return c.result;
                }
                if (sub == 0) break;
            }
        }
    }
    return c.result;
}

using CheckFn = CheckResult (*)(const InstancePool&);

const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"a-lower-opens", check_a},
        {"b-star-maximal", check_b},
        {"c-lower-finer-tb", check_c},
        {"d-minus-consistency", check_d},
        {"e-cech-axioms", check_e},
        {"f-lower-mod-finer", check_f},
        {"g-tau-closure", check_g},
        {"h-factorization", check_h},
        {"i-topological-closedness", check_i},
        {"j-reflection-meet", check_j},
        {"k-boundedly-generated", check_k},
        {"l-upper-opens", check_l},
        {"m-finest-miss", check_m},
        {"n-upper-reflection-plus", check_n},
        {"o-plus-stable", check_o},
        {"p-sandwich", check_p},
        {"q-upper-mod-finer", check_q},
        {"r-topological-cobounded-lift", check_r},
        {"s-topological-hit-intersection", check_s},
        {"t-coboundedly-generated", check_t},
        {"u-two-sided-opens", check_u},
        {"v-two-sided-bornological", check_v},
        {"w-grid-oracle", check_w},
    };
    return reg;
}

// ------------------------------------------------------------------ pool --

std::shared_ptr<const FiniteSpace> make_shared_space(FiniteSpace s) {
    return std::make_shared<const FiniteSpace>(std::move(s));
}

std::vector<HyperTopology> build_lower_topos(const FiniteSpace& space) {
    std::vector<HyperTopology> out;
    out.push_back(make_metric_topology(space, Side::Lower));
    out.push_back(make_indiscrete_topology(space));
    // principal up-set topologies: opens {0, up(s), everything}
    std::vector<Subset> seeds = {Subset{1}, space.full_set()};
    for (Subset seed : seeds) {
        Family up = principal_up(space, seed);
        if (up == space.full_hyperspace()) continue;
        HyperTopology t = make_table_topology(
            space, {0, space.family_complement(up), space.full_hyperspace()});
        t.name = "up(" + space.subset_str(seed) + ")";
        if (t.lowerish()) out.push_back(std::move(t));
    }
    return out;
}

std::vector<HyperTopology> build_upper_topos(const FiniteSpace& space) {
    std::vector<HyperTopology> out;
    out.push_back(make_metric_topology(space, Side::Upper));
    out.push_back(make_indiscrete_topology(space));
    std::vector<std::vector<Subset>> collections = {
        {Subset{1}},
        {space.full_set() & ~Subset{1}},
    };
    if (space.size() >= 2)
        collections.push_back({Subset{1}, space.full_set() & ~Subset{1}});
    for (const auto& coll : collections) {
        HyperTopology t = make_miss_topology(space, coll);
        std::string tag;
        for (Subset g : coll) tag += space.subset_str(g);
        t.name = "miss(" + tag + ")";
        if (t.upperish()) out.push_back(std::move(t));
    }
    if (space.size() >= 2) {
        // non-miss upper topology: opens {0, {empty set and singletons}, everything}
        Family d = Family{1};
        for (int i = 0; i < space.size(); ++i) d = family_with(d, Subset{1} << i);
        HyperTopology t = make_table_topology(
            space, {0, space.family_complement(d), space.full_hyperspace()});
        t.name = "small-sets";
        if (t.upperish()) out.push_back(std::move(t));
    }
    return out;
}

} // namespace

InstancePool build_pool(std::uint64_t seed, int max_points, int trials) {
    max_points = std::clamp(max_points, 1, 5);
    trials = std::max(trials, 1);
    InstancePool pool;
    pool.seed = seed;
    pool.max_points = max_points;
    pool.trials = trials;

    std::vector<std::pair<std::string, FiniteSpace>> roster;
    roster.push_back({"point", FiniteSpace::make({"a"}, {{Rat(0)}})});
    if (max_points >= 2) {
        roster.push_back(
            {"pair", FiniteSpace::make({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}})});
        roster.push_back(
            {"zero-pair",
             FiniteSpace::make({"a", "b"}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}})});
    }
    if (max_points >= 3) {
        roster.push_back({"line3", FiniteSpace::make({"a", "b", "c"},
                                                     {{Rat(0), Rat(1), Rat(3)},
                                                      {Rat(1), Rat(0), Rat(2)},
                                                      {Rat(3), Rat(2), Rat(0)}})});
        roster.push_back({"mixed3", FiniteSpace::make({"a", "b", "c"},
                                                      {{Rat(0), Rat(0), Rat(1)},
                                                       {Rat(0), Rat(0), Rat(1)},
                                                       {Rat(1), Rat(1), Rat(0)}})});
    }
    if (max_points >= 4) {
        roster.push_back({"line4", FiniteSpace::make({"a", "b", "c", "d"},
                                                     {{Rat(0), Rat(1), Rat(3), Rat(7)},
                                                      {Rat(1), Rat(0), Rat(2), Rat(6)},
                                                      {Rat(3), Rat(2), Rat(0), Rat(4)},
                                                      {Rat(7), Rat(6), Rat(4), Rat(0)}})});
        roster.push_back({"mixed4", FiniteSpace::make({"a", "b", "c", "d"},
                                                      {{Rat(0), Rat(0), Rat(1), Rat(3)},
                                                       {Rat(0), Rat(0), Rat(1), Rat(3)},
                                                       {Rat(1), Rat(1), Rat(0), Rat(2)},
                                                       {Rat(3), Rat(3), Rat(2), Rat(0)}})});
    }

    for (auto& [name, sp] : roster) {
        SpacePool p;
        p.name = name;
        p.space = make_shared_space(std::move(sp));
        const FiniteSpace& space = *p.space;
        p.exhaustive = space.size() <= 3;
        p.all_ideals = enumerate_ideals(space);
        if (p.exhaustive) {
            p.ideals = p.all_ideals;
            for (Family f = 0; ; ++f) {
                p.fams.push_back(f);
                if (f == space.full_hyperspace()) break;
            }
        } else {
            // fixed picks plus seeded draws
            std::mt19937_64 rng(seed);
            std::set<std::size_t> picked;
            auto pick_members = [&](Family members) {
                for (std::size_t i = 0; i < p.all_ideals.size(); ++i)
                    if (p.all_ideals[i].members() == members) picked.insert(i);
            };
            pick_members(Family{1});
            pick_members(space.full_hyperspace());
            pick_members(generate_ideal(space, {Subset{1}}).members());
            while (picked.size() < 6 && picked.size() < p.all_ideals.size())
                picked.insert(rng() % p.all_ideals.size());
            for (std::size_t i : picked) p.ideals.push_back(p.all_ideals[i]);
            for (int i = 0; i < trials; ++i)
                p.fams.push_back(rng() & space.full_hyperspace());
        }
        p.lower_topos = build_lower_topos(space);
        p.upper_topos = build_upper_topos(space);
        for (const HyperTopology& t : p.upper_topos)
            if (t.miss) p.miss_topos.push_back(t);
        pool.pools.push_back(std::move(p));
    }
    return pool;
}

Report verify_suite(const InstancePool& pool, const std::vector<std::string>& only_checks) {
    Report report;
    report.seed = pool.seed;
    report.max_points = pool.max_points;
    report.trials = pool.trials;
    for (const auto& [id, fn] : check_registry()) {
        if (!only_checks.empty() &&
            std::find(only_checks.begin(), only_checks.end(), id) == only_checks.end())
            continue;
        report.checks.push_back(fn(pool));
    }
    if (only_checks.empty()) {
        for (const char* target : {"non-topological-lower-mod", "non-topological-upper-mod",
                                   "two-sided-reflection-vs-meet"})
            report.searches.push_back(search_counterexample(target, pool));
    }
    return report;
}

SearchOutcome search_counterexample(const std::string& target, const InstancePool& pool) {
    SearchOutcome out;
    out.target = target;
    if (target == "non-topological-lower-mod" || target == "non-topological-upper-mod") {
        const bool lower = target == "non-topological-lower-mod";
        for (const SpacePool& sp : pool.pools) {
            if (!sp.exhaustive) continue;
            const FiniteSpace& space = *sp.space;
            const auto& topos = lower ? sp.lower_topos : sp.upper_topos;
            for (const HyperTopology& t : topos) {
                for (const Ideal& s : sp.ideals) {
                    ClosureOperator op = lower ? make_cl_lower_mod(space, t, s)
                                               : make_cl_upper_mod(space, t, s);
                    TopologicalResult r = is_topological(space, op, Scope::Exhaustive);
                    if (!r.topological) {
                        out.found = true;
                        out.witness = sp.name + " T=" + t.name + " S=" +
                                      fam_str(space, s.members()) +
                                      " family=" + fam_str(space, *r.witness);
                        return out;
                    }
                }
            }
        }
        return out;
    }
    if (target == "two-sided-reflection-vs-meet") {
        for (const SpacePool& sp : pool.pools) {
            if (!sp.exhaustive) continue;
            const FiniteSpace& space = *sp.space;
            HyperTopology h = make_metric_topology(space, Side::Both);
            for (const Ideal& s : sp.ideals) {
                HyperTopology tau = make_tau_topology(space, s);
                ClosureOperator meet = make_meet_operator(space, h.cl, tau.cl);
                ClosureOperator refl =
                    reflection_op(space, make_cl_born(space, s, Side::Both));
                for (Family f = 0; ; ++f) {
                    if (refl(f) != meet(f)) {
                        out.found = true;
                        out.witness = ideal_tag(sp, s) + " family=" + fam_str(space, f);
                        return out;
                    }
                    if (f == space.full_hyperspace()) break;
                }
            }
        }
        return out;
    }
    throw UnknownTarget("unknown search target '" + target + "'");
}

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& entry : check_registry()) ids.push_back(entry.first);
    return ids;
}

bool Report::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    json j;
    j["seed"] = seed;
    j["max_points"] = max_points;
    j["trials"] = trials;
    json cs = json::array();
    for (const CheckResult& c : checks) {
        cs.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"instances", c.instances},
                      {"pass", c.pass},
                      {"witness", c.witness},
                      {"branch_true", c.branch_true},
                      {"branch_false", c.branch_false}});
    }
    j["checks"] = std::move(cs);
    json ss = json::array();
    for (const SearchOutcome& s : searches)
        ss.push_back({{"target", s.target}, {"found", s.found}, {"witness", s.witness}});
    j["searches"] = std::move(ss);
    return j;
}

std::string Report::summary_table() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
        out << "  instances=" << c.instances;
        if (c.branch_true || c.branch_false)
            out << "  branches=" << c.branch_true << "/" << c.branch_false;
        if (!c.pass) out << "  witness: " << c.witness;
        out << "\n";
    }
    for (const SearchOutcome& s : searches) {
        out << (s.found ? "FOUND" : "NONE") << "  " << s.target;
        if (s.found) out << "  witness: " << s.witness;
        out << "\n";
    }
    return out.str();
}

} // namespace hyperborn
