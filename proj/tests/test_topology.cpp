// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hyperborn/topology.hpp"
#include "test_spaces.hpp"

using namespace hyperborn;
using namespace hyperborn::testing;

namespace {

// topology generated by a collection of opens: close under union/intersection
std::set<Family> generate_topology(const FiniteSpace& space, std::set<Family> opens) {
    opens.insert(0);
    opens.insert(space.full_hyperspace());
    for (;;) {
        std::set<Family> next = opens;
        for (Family a : opens)
            for (Family b : opens) {
                next.insert(a | b);
                next.insert(a & b);
            }
        if (next == opens) return opens;
        opens.swap(next);
    }
}

} // namespace

TEST_CASE("bracket families") {
    FiniteSpace m2 = space_m2();
    CHECK(bracket_family(m2, bits({0}), bits({0})) == 0);
    CHECK(bracket_family(m2, bits({0}), 0) == fam({bits({0}), bits({0, 1})}));
    CHECK(bracket_family(m2, 0, 0) == m2.full_hyperspace());
    CHECK(bracket_family(m2, 0, bits({1})) == fam({0, bits({0})}));
}

TEST_CASE("metric hyperspace topologies and their directedness") {
    FiniteSpace m3 = space_m3();
    HyperTopology lo = make_metric_topology(m3, Side::Lower);
    HyperTopology up = make_metric_topology(m3, Side::Upper);
    HyperTopology both = make_metric_topology(m3, Side::Both);
    CHECK(lo.kind == Directedness::Lower);
    CHECK_FALSE(lo.miss);
    CHECK(up.kind == Directedness::Upper);
    CHECK(up.miss);
    CHECK(both.kind == Directedness::Neither);
    CHECK(lo.lowerish());
    CHECK_FALSE(lo.upperish());
    CHECK(up.upperish());

    // the two-sided topology is the join of the one-sided ones
    std::set<Family> gen;
    for (Family g : enumerate_opens(m3, lo.cl)) gen.insert(g);
    for (Family g : enumerate_opens(m3, up.cl)) gen.insert(g);
    std::set<Family> joined = generate_topology(m3, std::move(gen));
    std::vector<Family> both_opens = enumerate_opens(m3, both.cl);
    CHECK(joined == std::set<Family>(both_opens.begin(), both_opens.end()));
}

TEST_CASE("trace topology extremes") {
    FiniteSpace m2 = space_m2();
    HyperTopology disc = make_tau_topology(m2, Ideal(m2, m2.full_hyperspace()));
    CHECK(enumerate_opens(m2, disc.cl).size() == 16);
    HyperTopology ind = make_tau_topology(m2, generate_ideal(m2, {}));
    CHECK(ind.kind == Directedness::BothIndiscrete);
    CHECK(enumerate_opens(m2, ind.cl) == std::vector<Family>{0, m2.full_hyperspace()});
    CHECK(ind.lowerish());
    CHECK(ind.upperish());
}

TEST_CASE("trace topology ignores distances") {
    // identical ideals on isometric-in-name-only spaces give the same closure
    FiniteSpace z = space_z2(), m = space_m2();
    const Ideal sz = generate_ideal(z, {bits({0})});
    const Ideal sm = generate_ideal(m, {bits({0})});
    for (Family f = 0; f <= z.full_hyperspace(); ++f)
        CHECK(cl_tau(z, sz, f) == cl_tau(m, sm, f));
}

TEST_CASE("miss topologies from a collection") {
    FiniteSpace m2 = space_m2();
    // the full set generates only the indiscrete topology
    HyperTopology triv = make_miss_topology(m2, {m2.full_set()});
    CHECK(enumerate_opens(m2, triv.cl) == std::vector<Family>{0, m2.full_hyperspace()});
    CHECK(triv.kind == Directedness::BothIndiscrete);
    // a singleton generator adds its principal down-set
    HyperTopology t = make_miss_topology(m2, {bits({0})});
    std::vector<Family> opens = enumerate_opens(m2, t.cl);
    CHECK(opens == std::vector<Family>{0, fam({0, bits({0})}), m2.full_hyperspace()});
    CHECK(t.kind == Directedness::Upper);
    CHECK(t.miss);
    CHECK(is_miss_topology(m2, t));
    CHECK_THROWS_AS(make_miss_topology(m2, {bits({4})}), InvalidSpec);
}

TEST_CASE("the upper metric topology is a miss topology, the lower one is not") {
    for (const FiniteSpace& s : {space_m2(), space_m3(), space_mixed3()}) {
        CHECK(is_miss_topology(s, make_metric_topology(s, Side::Upper)));
        CHECK_FALSE(is_miss_topology(s, make_metric_topology(s, Side::Lower)));
    }
}

TEST_CASE("table topologies") {
    FiniteSpace m2 = space_m2();
    const Family all = m2.full_hyperspace();
    // closed sets of the indiscrete topology
    HyperTopology t = make_table_topology(m2, {0, all});
    CHECK(enumerate_opens(m2, t.cl) == std::vector<Family>{0, all});
    CHECK(t.cl(Family{2}) == all);
    CHECK(t.closed_in(all));
    CHECK_FALSE(t.closed_in(Family{2}));
    CHECK_THROWS_AS(make_table_topology(m2, {Family{0}}), InvalidSpec);
    // {0, A, B, all} with A,B incomparable and A|B absent
    CHECK_THROWS_AS(make_table_topology(m2, {0, Family{3}, Family{5}, all}),
                    NonIdempotentTable);
}

TEST_CASE("table-topology enumeration on tiny spaces") {
    FiniteSpace p1 = FiniteSpace::make({"p"}, {{Rat(0)}});
    CHECK(enumerate_table_topologies(p1).size() == 4); // topologies on a 2-point set
    CHECK(enumerate_table_topologies(space_m2()).size() == 355);
}

TEST_CASE("directedness classification") {
    FiniteSpace m2 = space_m2();
    CHECK(make_discrete_topology(m2).kind == Directedness::Neither);
    CHECK(make_indiscrete_topology(m2).kind == Directedness::BothIndiscrete);
    HyperTopology up = make_metric_topology(m2, Side::Upper);
    CHECK(directedness_check(m2, up) == Directedness::Upper);
}
