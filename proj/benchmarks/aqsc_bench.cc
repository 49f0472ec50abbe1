// Copyright 2026 The AQSC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqsc/designer.hpp"
#include "aqsc/homology.hpp"
#include "aqsc/suites.hpp"
#include "benchmark/benchmark.h"

using namespace aqsc;

static void BM_enumerate_admissible(benchmark::State& state) {
    const Surface s = Surface::non_orientable(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_admissible(s, 64, 64));
    }
}
BENCHMARK(BM_enumerate_admissible)->Arg(5)->Arg(11)->Arg(31);

static void BM_compute_all_tables(benchmark::State& state) {
    for (auto _ : state) {
        for (int t = 1; t <= 4; ++t) benchmark::DoNotOptimize(compute_table(t));
    }
}
BENCHMARK(BM_compute_all_tables);

static void BM_gf2_rank_toric(benchmark::State& state) {
    const CssCode code = css_from_complex(build_toric(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2_rank(code.h_x));
        benchmark::DoNotOptimize(gf2_rank(code.h_z));
    }
}
BENCHMARK(BM_gf2_rank_toric)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_cycle_distances_toric(benchmark::State& state) {
    const SurfaceComplex c = build_toric(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_distances(c));
    }
}
BENCHMARK(BM_cycle_distances_toric)->Arg(4)->Arg(8)->Arg(12);

static void BM_brute_force_distances_toric3(benchmark::State& state) {
    const CssCode code = css_from_complex(build_toric(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_distances(code));
    }
}
BENCHMARK(BM_brute_force_distances_toric3);

BENCHMARK_MAIN();
