// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one pass/fail line per criterion. The first argument is
// the path to the command-line tool (used for the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperborn/verifier.hpp"

namespace {

using namespace hyperborn;

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

const CheckResult* find_check(const Report& r, const std::string& id) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const CheckResult& c) { return c.id == id; });
    return it == r.checks.end() ? nullptr : &*it;
}

bool check_passes(const Report& r, const std::string& id) {
    const CheckResult* c = find_check(r, id);
    return c && c->pass;
}

bool both_branches(const Report& r, const std::string& id) {
    const CheckResult* c = find_check(r, id);
    return c && c->branch_true > 0 && c->branch_false > 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // One full run over the exhaustive pools backs most criteria.
    Report small = verify_suite(build_pool(7, 3));

    // 1. Every constructed closure operator satisfies the four closure
    //    axioms: exhaustively at |X| <= 3, sampled (200 families) at |X| = 4,
    //    within a 60 s budget.
    {
        auto t0 = std::chrono::steady_clock::now();
        Report axioms = verify_suite(build_pool(7, 4, 200), {"e-cech-axioms"});
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::ostringstream d;
        d.precision(2);
        d << std::fixed << secs << " s";
        report(1, "closure-axiom-suite",
               check_passes(axioms, "e-cech-axioms") && secs < 60.0, d.str());
    }

    // 2. Lower modification factors exactly as trace closure after the
    //    underlying topology's closure, for every pooled topology, ideal,
    //    and family at |X| <= 3.
    report(2, "lower-factorization", check_passes(small, "h-factorization"));

    // 3. The idempotent hulls of the lower/upper bornological closures agree
    //    with the alternating meet of the metric topology and the trace
    //    topology, including 50 seeded |X| = 4 instances.
    {
        Report meet = verify_suite(build_pool(7, 4, 50), {"j-reflection-meet"});
        report(3, "reflection-equals-meet",
               check_passes(meet, "j-reflection-meet"));
    }

    // 4. Open-set characterizations of the three reflections: existence-
    //    condition unions (lower), stable cobounded unions (upper), and the
    //    bracket/uniform-neighbourhood witnesses (two-sided).
    report(4, "open-set-characterizations",
           check_passes(small, "a-lower-opens") &&
               check_passes(small, "l-upper-opens") &&
               check_passes(small, "u-two-sided-opens"));

    // 5. Fixed-point ideals: the shrinking iteration terminates within |S|
    //    steps and yields the largest stable sub-ideal; the upper reflection
    //    is the bornological closure of the enlargement-stable part.
    report(5, "fixed-point-ideals",
           check_passes(small, "b-star-maximal") &&
               check_passes(small, "n-upper-reflection-plus"));

    // 6. Both branches of every equivalence were exercised, and the pool
    //    contains topological and non-topological modification instances.
    {
        bool searches_ok = false;
        for (const SearchOutcome& s : small.searches)
            if (s.target == "non-topological-upper-mod") searches_ok = s.found;
        report(6, "equivalences-exercise-both-branches",
               searches_ok && both_branches(small, "i-topological-closedness") &&
                   both_branches(small, "r-topological-cobounded-lift") &&
                   both_branches(small, "s-topological-hit-intersection") &&
                   both_branches(small, "q-upper-mod-finer"));
    }

    // 7. Band-based epsilon decisions agree with the dense rational grid
    //    oracle on every operator in the exhaustive runs.
    report(7, "band-vs-grid-oracle", check_passes(small, "w-grid-oracle"));

    // 8. Two CLI verification runs with the same seed produce byte-identical
    //    reports.
    {
        bool ok = false;
        std::string detail;
        if (cli.empty()) {
            detail = "no CLI path given";
        } else {
            const std::string r1 = "acceptance_report_1.json";
            const std::string r2 = "acceptance_report_2.json";
            const std::string base = "\"" + cli +
                                     "\" verify --seed 7 --max-points 4 --report ";
            int rc1 = std::system((base + r1 + " > /dev/null").c_str());
            int rc2 = std::system((base + r2 + " > /dev/null").c_str());
            std::string a = slurp(r1), b = slurp(r2);
            ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
            if (!ok) detail = "reports differ or runs failed";
            std::remove(r1.c_str());
            std::remove(r2.c_str());
        }
        report(8, "deterministic-reports", ok, detail);
    }

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
