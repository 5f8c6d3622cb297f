// Copyright 2026 The unitforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "unitforge/classify.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/units.hpp"
#include "unitforge/verify.hpp"

namespace {

using namespace unitforge;

void BM_TruncatedPolyUnits(benchmark::State& state) {
  const Ring r = build_ring(*make_trunc_poly(2, {static_cast<int>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(unit_group_report(r));
  state.SetComplexityN(static_cast<std::int64_t>(r.order()));
}
BENCHMARK(BM_TruncatedPolyUnits)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_GroupAlgebraUnits(benchmark::State& state) {
  const Ring r = build_ring(*parse_ring("F2[D8]"));
  for (auto _ : state) benchmark::DoNotOptimize(unit_group_report(r));
}
BENCHMARK(BM_GroupAlgebraUnits)->Unit(benchmark::kMillisecond);

void BM_GaloisRingUnits(benchmark::State& state) {
  const Ring r = build_ring(*make_gr(3, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(unit_group_report(r));
}
BENCHMARK(BM_GaloisRingUnits)->Unit(benchmark::kMillisecond);

void BM_JacobsonRadical(benchmark::State& state) {
  const Ring r = build_ring(*parse_ring("U3[F2]"));
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(r));
}
BENCHMARK(BM_JacobsonRadical);

void BM_ClassifyChar2(benchmark::State& state) {
  const AbelianType g = parse_abelian("C8xC4^3xC2^5");
  for (auto _ : state) benchmark::DoNotOptimize(classify_char2(g));
}
BENCHMARK(BM_ClassifyChar2);

void BM_ClassifyAny(benchmark::State& state) {
  const GroupSpec g = parse_group("C4xC32");
  for (auto _ : state) benchmark::DoNotOptimize(classify(g, CharSpec::any()));
}
BENCHMARK(BM_ClassifyAny);

void BM_SuiteC48(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(suite_c48());
}
BENCHMARK(BM_SuiteC48);

}  // namespace

BENCHMARK_MAIN();
