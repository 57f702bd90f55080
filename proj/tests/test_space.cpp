// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "hyperborn/space.hpp"
#include "test_spaces.hpp"

using namespace hyperborn;
using namespace hyperborn::testing;

TEST_CASE("line metric validates") {
    FiniteSpace w = space_w();
    CHECK(w.size() == 4);
    CHECK(w.dist(0, 3) == Rat(7));
    CHECK(w.dist(3, 0) == Rat(7));
}

TEST_CASE("axiom violations are named with witnesses") {
    SUBCASE("symmetry") {
        try {
            FiniteSpace::make({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}});
            FAIL("expected MetricAxiomError");
        } catch (const MetricAxiomError& e) {
            CHECK(e.axiom == "symmetry");
            CHECK(e.i == 0);
            CHECK(e.j == 1);
        }
    }
    SUBCASE("triangle, found by checking all triples") {
        // d(a,b)=1, d(b,c)=1, d(a,c)=5
        try {
            FiniteSpace::make({"a", "b", "c"}, {{Rat(0), Rat(1), Rat(5)},
                                                {Rat(1), Rat(0), Rat(1)},
                                                {Rat(5), Rat(1), Rat(0)}});
            FAIL("expected MetricAxiomError");
        } catch (const MetricAxiomError& e) {
            CHECK(e.axiom == "triangle");
        }
    }
    SUBCASE("diagonal") {
        CHECK_THROWS_AS(FiniteSpace::make({"a"}, {{Rat(1)}}), MetricAxiomError);
    }
    SUBCASE("pseudometric zero off the diagonal is legal") {
        CHECK(space_z2().size() == 2);
    }
}

TEST_CASE("enlargement uses strict inequality") {
    FiniteSpace w = space_w();
    CHECK(enlarge(w, bits({0}), Rat(3, 2)) == bits({0, 1}));
    CHECK(enlarge(w, bits({0}), Rat(1)) == bits({0})); // d(a,b)=1 is not < 1
    CHECK(enlarge(w, 0, Rat(1)) == 0);
    for (const Rat& eps : {Rat(1, 2), Rat(2), Rat(100)})
        CHECK(enlarge(w, w.full_set(), eps) == w.full_set());
    CHECK_THROWS_AS(enlarge(w, bits({0}), Rat(0)), DomainError);
    CHECK_THROWS_AS(enlarge(w, bits({0}), Rat(-1)), DomainError);
}

TEST_CASE("hausdorff distance") {
    FiniteSpace w = space_w();
    CHECK(hausdorff(w, bits({0}), bits({1})) == ExtRat(Rat(1)));
    for (Subset a = 0; a <= w.full_set(); ++a)
        CHECK(hausdorff(w, a, a) == ExtRat(Rat(0)));
    CHECK(hausdorff(w, 0, bits({0})).is_infinite());
    CHECK(hausdorff(w, bits({0}), 0).is_infinite());
    CHECK(hausdorff(w, 0, 0) == ExtRat(Rat(0)));
    CHECK(hausdorff(w, bits({0, 1}), bits({3})) == ExtRat(Rat(7)));
}

TEST_CASE("critical bands") {
    CHECK(space_w().critical_bands() ==
          std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4), Rat(6), Rat(7)});
    CHECK(FiniteSpace::make({"p"}, {{Rat(0)}}).critical_bands().empty());
    CHECK(space_z2().critical_bands().empty());
    CHECK(space_z2().band_reps() == std::vector<Rat>{Rat(1)});
}

TEST_CASE("enlargement is monotone in eps") {
    FiniteSpace w = space_w();
    std::vector<Rat> epses;
    for (int k = 1; k <= 32; ++k) epses.push_back(Rat(k, 4));
    for (Subset a = 0; a <= w.full_set(); ++a)
        for (std::size_t i = 0; i + 1 < epses.size(); ++i)
            CHECK((enlarge(w, a, epses[i]) & ~enlarge(w, a, epses[i + 1])) == 0);
}

TEST_CASE("enlargement is constant on bands") {
    for (const FiniteSpace& s : {space_w(), space_mixed3(), space_z2()}) {
        const auto& t = s.critical_bands();
        // two sample rationals per band: the right endpoint and a midpoint
        std::vector<std::pair<Rat, Rat>> samples;
        Rat prev(0);
        for (const Rat& th : t) {
            samples.push_back({(prev + th) / Rat(2) == prev ? th : (prev + th) / Rat(2), th});
            prev = th;
        }
        samples.push_back({prev + Rat(1, 3), prev + Rat(5)}); // top band
        for (Subset a = 0; a <= s.full_set(); ++a)
            for (const auto& [lo, hi] : samples)
                CHECK(enlarge(s, a, lo) == enlarge(s, a, hi));
    }
}

TEST_CASE("sub-minimal enlargement is saturation") {
    for (const FiniteSpace& s : {space_w(), space_mixed3(), space_z2()}) {
        const Rat eps = s.sub_minimal_eps();
        for (Subset a = 0; a <= s.full_set(); ++a) {
            if (a == 0) continue;
            CHECK(enlarge(s, a, eps) == s.saturate(a));
        }
    }
    // on a true metric the saturation is the identity
    FiniteSpace w = space_w();
    for (Subset a = 0; a <= w.full_set(); ++a) CHECK(w.saturate(a) == a);
    CHECK(space_z2().saturate(bits({0})) == bits({0, 1}));
}

TEST_CASE("hausdorff is an extended pseudometric on the hyperspace") {
    for (const FiniteSpace& s : {space_w(), space_mixed3(), space_z2()}) {
        for (Subset a = 0; a <= s.full_set(); ++a)
            for (Subset b = 0; b <= s.full_set(); ++b)
                CHECK(hausdorff(s, a, b) == hausdorff(s, b, a));
    }
    // triangle inequality, all triples on |X| <= 3, over finite values
    for (const FiniteSpace& s : {space_m3(), space_mixed3(), space_z2()}) {
        for (Subset a = 0; a <= s.full_set(); ++a)
            for (Subset b = 0; b <= s.full_set(); ++b)
                for (Subset c = 0; c <= s.full_set(); ++c) {
                    ExtRat ab = hausdorff(s, a, b), bc = hausdorff(s, b, c),
                           ac = hausdorff(s, a, c);
                    if (!ab.is_infinite() && !bc.is_infinite())
                        CHECK(ac <= ExtRat(ab.finite() + bc.finite()));
                }
    }
}

TEST_CASE("subset printing") {
    FiniteSpace w = space_w();
    CHECK(w.subset_str(bits({0, 2})) == "{a,c}");
    CHECK(w.subset_str(0) == "{}");
}
