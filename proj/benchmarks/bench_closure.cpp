// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "hyperborn/verifier.hpp"

namespace {

using namespace hyperborn;

FiniteSpace line3() {
    return FiniteSpace::make({"a", "b", "c"},
                             {{Rat(0), Rat(1), Rat(3)},
                              {Rat(1), Rat(0), Rat(2)},
                              {Rat(3), Rat(2), Rat(0)}});
}

void BM_BornClosureLower(benchmark::State& state) {
    FiniteSpace s = line3();
    const Ideal ideal = generate_ideal(s, {Subset{1}});
    for (auto _ : state)
        for (Family f = 0; f <= s.full_hyperspace(); ++f)
            benchmark::DoNotOptimize(cl_born(s, ideal, Side::Lower, f));
}
BENCHMARK(BM_BornClosureLower);

void BM_IdempotentHull(benchmark::State& state) {
    FiniteSpace s = line3();
    const Ideal ideal = generate_ideal(s, {Subset{1}});
    ClosureOperator op = make_cl_born(s, ideal, Side::Both);
    for (auto _ : state)
        for (Family f = 0; f <= s.full_hyperspace(); ++f)
            benchmark::DoNotOptimize(idempotent_hull(op, f).hull);
}
BENCHMARK(BM_IdempotentHull);

void BM_StarIdeal(benchmark::State& state) {
    FiniteSpace s = line3();
    for (auto _ : state)
        for (const Ideal& i : enumerate_ideals(s))
            benchmark::DoNotOptimize(star_ideal(s, i).ideal.members());
}
BENCHMARK(BM_StarIdeal);

void BM_VerifySuiteSmall(benchmark::State& state) {
    for (auto _ : state) {
        Report r = verify_suite(build_pool(7, 2), {"e-cech-axioms"});
        benchmark::DoNotOptimize(r.all_pass());
    }
}
BENCHMARK(BM_VerifySuiteSmall);

} // namespace

BENCHMARK_MAIN();
