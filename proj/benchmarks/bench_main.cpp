/*
   Copyright 2026 The hmdist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "hmdist/cohomology.hpp"
#include "hmdist/dist_invariants.hpp"
#include "hmdist/fixtures.hpp"
#include "hmdist/form_algebra.hpp"
#include "hmdist/intersection_ring.hpp"
#include "hmdist/paths.hpp"
#include "hmdist/verify.hpp"

using namespace hmdist;

static void BM_RingMultiply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto h = IntersectionClass<Rational>::linear(n, 1, 3);
    auto a = ic_pow(h, n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(ic_mul(a, ic_inverse(a)));
}
BENCHMARK(BM_RingMultiply)->Arg(4)->Arg(8)->Arg(16);

static void BM_TensorTangent(benchmark::State& state) {
    auto t = tangent_bundle<Rational>(4);
    for (auto _ : state) benchmark::DoNotOptimize(tensor(t, t));
}
BENCHMARK(BM_TensorTangent);

static void BM_Hrr(benchmark::State& state) {
    auto t = twist(tangent_bundle<Rational>(4), 3L);
    for (auto _ : state) benchmark::DoNotOptimize(hrr(t));
}
BENCHMARK(BM_Hrr);

static void BM_BottTable(benchmark::State& state) {
    for (auto _ : state)
        for (long k = -10; k <= 10; ++k) benchmark::DoNotOptimize(bott(4, 2, k));
}
BENCHMARK(BM_BottTable);

static void BM_RaoDimension(benchmark::State& state) {
    long a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(rao_dimension(a));
}
BENCHMARK(BM_RaoDimension)->Arg(2)->Arg(4)->Arg(8);

static void BM_HMInvariants(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hm_invariants(state.range(0)));
}
BENCHMARK(BM_HMInvariants)->Arg(3)->Arg(10);

static void BM_SchoutenPencil(benchmark::State& state) {
    auto rho = pencil_bivector();
    for (auto _ : state) benchmark::DoNotOptimize(schouten(rho, rho));
}
BENCHMARK(BM_SchoutenPencil);

static void BM_VerifyAll(benchmark::State& state) {
    auto fs = FixtureSet::load_directory(fixture_dir().string());
    for (auto _ : state) benchmark::DoNotOptimize(run_checks(fs));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
