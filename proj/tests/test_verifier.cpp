// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "hyperborn/verifier.hpp"
#include "test_spaces.hpp"

using namespace hyperborn;
using namespace hyperborn::testing;

TEST_CASE("pool construction is deterministic and well formed") {
    InstancePool pool = build_pool(7, 3);
    REQUIRE(pool.pools.size() == 5);
    CHECK(pool.pools[0].name == "point");
    CHECK(pool.pools[1].name == "pair");
    CHECK(pool.pools[2].name == "zero-pair"); // a pseudometric must be present
    CHECK(pool.pools[3].name == "line3");
    CHECK(pool.pools[4].name == "mixed3");
    for (const SpacePool& sp : pool.pools) {
        CHECK(sp.exhaustive);
        CHECK(sp.ideals.size() == sp.all_ideals.size());
        CHECK(sp.fams.size() ==
              static_cast<std::size_t>(sp.space->full_hyperspace()) + 1);
        for (const HyperTopology& t : sp.lower_topos) CHECK(t.lowerish());
        for (const HyperTopology& t : sp.upper_topos) CHECK(t.upperish());
        for (const HyperTopology& t : sp.miss_topos) CHECK(t.miss);
    }
    InstancePool big = build_pool(7, 4, 50);
    REQUIRE(big.pools.size() == 7);
    CHECK_FALSE(big.pools[5].exhaustive);
    CHECK(big.pools[5].fams.size() == 50);
    CHECK_FALSE(big.pools[6].ideals.empty());
}

TEST_CASE("the full suite passes on the exhaustive pools") {
    Report r = verify_suite(build_pool(7, 3));
    CHECK(r.all_pass());
    CHECK(r.checks.size() == check_ids().size());
    // report order is the documented check order
    for (std::size_t i = 0; i < r.checks.size(); ++i)
        CHECK(r.checks[i].id == check_ids()[i]);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return a.id < b.id;
                         }));
    // every iff-shaped check saw both branches
    for (const char* id : {"b-star-maximal", "i-topological-closedness",
                           "o-plus-stable", "q-upper-mod-finer",
                           "r-topological-cobounded-lift",
                           "s-topological-hit-intersection"}) {
        auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const CheckResult& c) { return c.id == id; });
        REQUIRE(it != r.checks.end());
        CHECK(it->branch_true > 0);
        CHECK(it->branch_false > 0);
    }
    CHECK(r.summary_table().find("FAIL") == std::string::npos);
    REQUIRE(r.searches.size() == 3);
    CHECK(r.searches[0].target == "non-topological-lower-mod");
    CHECK(r.searches[0].found);
    CHECK(r.searches[1].target == "non-topological-upper-mod");
    CHECK(r.searches[1].found);
    CHECK(r.searches[2].target == "two-sided-reflection-vs-meet");
    CHECK_FALSE(r.searches[2].found);
}

TEST_CASE("reports with the same seed are byte-identical") {
    std::string a = verify_suite(build_pool(11, 4, 50)).to_json().dump(2);
    std::string b = verify_suite(build_pool(11, 4, 50)).to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("restricting to one check skips the others and the searches") {
    Report r = verify_suite(build_pool(7, 2), {"e-cech-axioms"});
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].id == "e-cech-axioms");
    CHECK(r.checks[0].pass);
    CHECK(r.searches.empty());
}

TEST_CASE("unknown search targets are rejected") {
    InstancePool pool = build_pool(7, 2);
    CHECK_THROWS_AS(search_counterexample("frisbee", pool), UnknownTarget);
}

// The refinement-vs-approximable-hull equivalence fails on pseudometric
// spaces once the empty set is a hyperspace point; only the forward
// implication survives, which is what the verifier asserts.
TEST_CASE("tb refinement criterion breaks on the zero-distance pair") {
    FiniteSpace z = space_z2();
    const Ideal s = generate_ideal(z, {bits({0})});   // {∅,{a}}
    const Ideal sp = generate_ideal(z, {bits({1})});  // {∅,{b}}
    // S' sits inside the approximable hull of S ...
    CHECK(family_subset(sp.members(), tb_hull(z, s).members()));
    // ... but cl_S is not finer than cl_S' at the family {∅}
    Family at_empty_s = cl_born(z, s, Side::Lower, Family{1});
    Family at_empty_sp = cl_born(z, sp, Side::Lower, Family{1});
    CHECK(at_empty_s == fam({0, bits({1})}));
    CHECK(at_empty_sp == fam({0, bits({0})}));
    CHECK_FALSE(family_subset(at_empty_s, at_empty_sp));
    // consequence: the reflection is bornological via the trivial ideal, not
    // via the derived fixpoint ideal (which is the full powerset here)
    ClosureOperator born = make_cl_born(z, s, Side::Lower);
    const Ideal triv = generate_ideal(z, {});
    const Ideal minus = minus_ideal(z, s);
    CHECK(minus.members() == z.full_hyperspace());
    for (Family f = 0; f <= z.full_hyperspace(); ++f) {
        CHECK(idempotent_hull(born, f).hull == cl_born(z, triv, Side::Lower, f));
    }
    CHECK(idempotent_hull(born, Family{1}).hull !=
          cl_born(z, minus, Side::Lower, Family{1}));
}

// The upper refinement criterion needs a miss topology: with a non-miss upper
// topology the criterion holds while the refinement fails.
TEST_CASE("upper refinement criterion breaks without a miss base") {
    FiniteSpace m2 = space_m2();
    const Family all = m2.full_hyperspace();
    // opens: nothing, {∅,{a},{b}}, everything -- upper but not miss
    HyperTopology t = make_table_topology(m2, {0, all & ~Family{7}, all});
    CHECK(t.upperish());
    CHECK_FALSE(is_miss_topology(m2, t));
    const Ideal s = generate_ideal(m2, {bits({0})});
    const Ideal star(m2, all);
    // the difference criterion holds for every member of the powerset ideal
    for (Subset ms = 0; ms <= m2.full_set(); ++ms) {
        Family diffs = 0;
        for (Subset m = 0; m <= m2.full_set(); ++m)
            if (s.contains(m)) diffs = family_with(diffs, ms & ~m);
        CHECK(subset_in(t.cl(diffs), 0));
    }
    // yet the modification by S does not refine the one by the powerset
    Family via_s = cl_upper_mod(m2, t, s, fam({m2.full_set()}));
    Family via_star = cl_upper_mod(m2, t, star, fam({m2.full_set()}));
    CHECK(via_s == all);
    CHECK(via_star == fam({m2.full_set()}));
    CHECK_FALSE(family_subset(via_s, via_star));
}

// The upward directed-family shortcut must compare traces, not whole sets:
// {a} is in the trace closure of the up-closed family {{b},{a,b}} although no
// member of that family is contained in {a}.
TEST_CASE("upward directed families compare traces") {
    FiniteSpace m2 = space_m2();
    const Ideal s = generate_ideal(m2, {bits({0})});
    Family up = fam({bits({1}), bits({0, 1})});
    CHECK(updown(m2, up, UpDown::Up) == up);
    CHECK(subset_in(cl_tau(m2, s, up), bits({0})));
    for (Subset b = 0; b <= m2.full_set(); ++b)
        if (subset_in(up, b)) CHECK((b & ~bits({0})) != 0);
}

// The bracket/uniform-neighbourhood criterion is necessary but not
// sufficient: {∅} satisfies it via a degenerate bracket but is never open.
TEST_CASE("uniform neighbourhood criterion is not sufficient for openness") {
    FiniteSpace m2 = space_m2();
    const Ideal s = generate_ideal(m2, {bits({0})});
    // bracket [∅, {a}^2] degenerates to {∅}
    CHECK(bracket_family(m2, 0, enlarge(m2, bits({0}), Rat(2))) == Family{1});
    // whose Hausdorff blow-up is itself, at any radius
    CHECK(hausdorff(m2, 0, bits({1})).is_infinite());
    // yet {∅} is not open in the two-sided reflection
    ClosureOperator born = make_cl_born(m2, s, Side::Both);
    ClosureOperator refl;
    refl.universe = m2.full_hyperspace();
    refl.topological_hint = true;
    refl.map = [born](Family f) { return idempotent_hull(born, f).hull; };
    CHECK_FALSE(is_open(m2, refl, Family{1}));
}

TEST_CASE("found counterexamples replay") {
    InstancePool pool = build_pool(7, 3);
    SearchOutcome up = search_counterexample("non-topological-upper-mod", pool);
    REQUIRE(up.found);
    CHECK(up.witness.find("zero-pair") != std::string::npos);
    // replay: the reported operator really is non-idempotent
    FiniteSpace z = space_z2();
    const Ideal s = generate_ideal(z, {bits({0})});
    HyperTopology hplus = make_metric_topology(z, Side::Upper);
    ClosureOperator op = make_cl_upper_mod(z, hplus, s);
    Family w = fam({bits({0})});
    CHECK(op(op(w)) != op(w));
}
