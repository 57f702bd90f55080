// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "hyperborn/closure.hpp"
#include "hyperborn/topology.hpp"
#include "test_spaces.hpp"

using namespace hyperborn;
using namespace hyperborn::testing;

namespace {

// expansive but not idempotent: adds the "next" family bit via a shift
ClosureOperator shift_op(const FiniteSpace& space) {
    ClosureOperator op;
    op.name = "shift";
    op.universe = space.full_hyperspace();
    const Family all = space.full_hyperspace();
    op.map = [all](Family f) { return (f | (f << 1)) & all; };
    return op;
}

} // namespace

TEST_CASE("metric closure, lower side") {
    FiniteSpace w = space_w();
    // sat is the identity on a true metric, so lower closure collects subsets
    CHECK(cl_metric(w, Side::Lower, fam({bits({0, 2})})) ==
          fam({0, bits({0}), bits({2}), bits({0, 2})}));
    CHECK(cl_metric(w, Side::Lower, 0) == 0);
}

TEST_CASE("metric closure, both sides") {
    FiniteSpace m3 = space_m3();
    for (Family f = 0; f <= m3.full_hyperspace(); ++f)
        CHECK(cl_metric(m3, Side::Both, f) == f); // identity on a true metric
    FiniteSpace z = space_z2();
    CHECK(cl_metric(z, Side::Both, fam({bits({0})})) ==
          fam({bits({0}), bits({1}), bits({0, 1})}));
}

TEST_CASE("bornological closure, lower side") {
    FiniteSpace w = space_w();
    const Ideal s = generate_ideal(w, {bits({0}), bits({1})});
    Family expected = 0;
    for (Subset a = 0; a <= w.full_set(); ++a)
        if (!(a & bits({1}))) expected = family_with(expected, a); // all A without b
    CHECK(cl_born(w, s, Side::Lower, fam({bits({0, 2})})) == expected);
}

TEST_CASE("trivial ideal makes the bornological closure indiscrete") {
    FiniteSpace w = space_w();
    const Ideal s = generate_ideal(w, {});
    for (Side side : {Side::Lower, Side::Upper, Side::Both}) {
        CHECK(cl_born(w, s, side, fam({bits({2})})) == w.full_hyperspace());
        CHECK(cl_born(w, s, side, 0) == 0);
    }
}

TEST_CASE("powerset ideal recovers the metric closure") {
    for (const FiniteSpace& s : {space_mixed3(), space_m3(), space_z2()}) {
        const Ideal top(s, s.full_hyperspace());
        for (Side side : {Side::Lower, Side::Upper, Side::Both})
            for (Family f = 0; f <= s.full_hyperspace(); ++f)
                CHECK(cl_born(s, top, side, f) == cl_metric(s, side, f));
    }
}

TEST_CASE("trace closure") {
    FiniteSpace w = space_w();
    const Ideal s = generate_ideal(w, {bits({0})});
    Family expected = 0;
    for (Subset a = 0; a <= w.full_set(); ++a)
        if (a & bits({0})) expected = family_with(expected, a); // all A containing a
    CHECK(cl_tau(w, s, fam({bits({0, 1})})) == expected);
    // trivial ideal: indiscrete
    const Ideal triv = generate_ideal(w, {});
    CHECK(cl_tau(w, triv, fam({bits({2})})) == w.full_hyperspace());
    CHECK(cl_tau(w, triv, 0) == 0);
}

TEST_CASE("closure axioms hold exhaustively for the stock operators") {
    for (const FiniteSpace& s : {space_m2(), space_z2(), space_mixed3()}) {
        std::vector<ClosureOperator> ops;
        for (Side side : {Side::Lower, Side::Upper, Side::Both})
            ops.push_back(make_cl_metric(s, side));
        for (const Ideal& i : enumerate_ideals(s)) {
            for (Side side : {Side::Lower, Side::Upper, Side::Both})
                ops.push_back(make_cl_born(s, i, side));
            ops.push_back(make_cl_tau(s, i));
        }
        ops.push_back(make_identity_operator(s));
        for (const auto& op : ops) {
            CechReport r = cech_validate(s, op, Scope::Exhaustive);
            CHECK_MESSAGE(r.all_pass(), op.name);
        }
    }
}

TEST_CASE("axiom violations come with witnesses") {
    FiniteSpace m2 = space_m2();
    ClosureOperator bad;
    bad.name = "constant-full";
    bad.universe = m2.full_hyperspace();
    const Family all = m2.full_hyperspace();
    bad.map = [all](Family) { return all; };
    CechReport r = cech_validate(m2, bad, Scope::Exhaustive);
    CHECK_FALSE(r.all_pass());
    for (const auto& ax : r.axioms) {
        if (ax.axiom == "empty") {
            CHECK_FALSE(ax.pass);
            REQUIRE(ax.witness.has_value());
            CHECK(ax.witness->first == Family{0});
        } else {
            CHECK(ax.pass);
        }
    }
    // sampled scope finds the same violation
    CHECK_FALSE(cech_validate(m2, bad, Scope::Sampled, 50, 3).all_pass());
}

TEST_CASE("idempotency detection") {
    FiniteSpace m2 = space_m2();
    CHECK(is_topological(m2, make_identity_operator(m2), Scope::Exhaustive).topological);
    for (Side side : {Side::Lower, Side::Upper, Side::Both})
        CHECK(is_topological(m2, make_cl_metric(m2, side), Scope::Exhaustive).topological);
    TopologicalResult r = is_topological(m2, shift_op(m2), Scope::Exhaustive);
    CHECK_FALSE(r.topological);
    REQUIRE(r.witness.has_value());
    Family w = *r.witness;
    ClosureOperator op = shift_op(m2);
    CHECK(op(op(w)) != op(w));
}

TEST_CASE("idempotent hull iterates to the least fixed point") {
    FiniteSpace m2 = space_m2();
    ClosureOperator op = shift_op(m2);
    HullResult h = idempotent_hull(op, Family{1});
    CHECK(h.hull == m2.full_hyperspace());
    CHECK(h.iterations == 4);
    CHECK(idempotent_hull(make_identity_operator(m2), Family{5}).iterations == 1);
}

TEST_CASE("open sets") {
    FiniteSpace m2 = space_m2();
    CHECK(enumerate_opens(m2, make_identity_operator(m2)).size() == 16);
    HyperTopology ind = make_indiscrete_topology(m2);
    CHECK(enumerate_opens(m2, ind.cl) ==
          std::vector<Family>{0, m2.full_hyperspace()});
    CHECK(is_open(m2, ind.cl, Family{1}) == false);
}

TEST_CASE("meet of topologies") {
    FiniteSpace m2 = space_m2();
    ClosureOperator id = make_identity_operator(m2);
    HyperTopology ind = make_indiscrete_topology(m2);
    ClosureOperator hminus = make_cl_metric(m2, Side::Lower);
    // meeting with the discrete topology changes nothing
    for (Family f = 0; f <= m2.full_hyperspace(); ++f)
        CHECK(meet_closure(id, hminus, f) == hminus(f));
    // meeting with the indiscrete topology collapses everything
    CHECK(meet_closure(ind.cl, hminus, Family{2}) == m2.full_hyperspace());
    CHECK(meet_closure(ind.cl, hminus, 0) == 0);
    // the meet operator is itself idempotent and closed under both arguments
    ClosureOperator meet = make_meet_operator(m2, hminus, make_cl_metric(m2, Side::Upper));
    CHECK(is_topological(m2, meet, Scope::Exhaustive).topological);
    for (Family f = 0; f <= m2.full_hyperspace(); ++f) {
        Family c = meet(f);
        CHECK(hminus(c) == c);
        CHECK(family_subset(hminus(f), c));
    }
    // non-idempotent inputs are rejected
    const Ideal s = generate_ideal(m2, {bits({0})});
    ClosureOperator born = make_cl_born(m2, s, Side::Lower);
    CHECK_THROWS_AS(meet_closure(born, id, Family{1}), NotIdempotentInput);
}
