// Copyright 2026 The udes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "udes/design.hpp"
#include "udes/group.hpp"
#include "udes/twirl.hpp"

namespace {

using namespace udes;

void BM_VerifyDesign(benchmark::State& state) {
  const UnitarySet d = named_design("D").set;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_design(d, 2, kDesignTol, threads));
}
BENCHMARK(BM_VerifyDesign)->Arg(1)->Arg(4);

void BM_TwirlFinite(benchmark::State& state) {
  const UnitarySet d = named_design("D").set;
  const Mat e = Mat::unit(4, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(twirl_finite(d, 2, e));
}
BENCHMARK(BM_TwirlFinite);

void BM_FramePotential(benchmark::State& state) {
  const UnitarySet d = named_design("D").set;
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential(d, 2));
}
BENCHMARK(BM_FramePotential);

void BM_SuperopChoiRank(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(choi_rank(superop_of_haar_twirl(2)));
}
BENCHMARK(BM_SuperopChoiRank);

void BM_McHaarTwirl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    HaarSampler h(7);
    benchmark::DoNotOptimize(mc_haar_twirl_basis(h, 2, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McHaarTwirl)->Arg(10000);

void BM_GroupProfile(benchmark::State& state) {
  const Su2Closure c = su2_closure(named_design("D").set);
  for (auto _ : state) benchmark::DoNotOptimize(group_profile(c));
}
BENCHMARK(BM_GroupProfile);

void BM_ExtendTo2Design(benchmark::State& state) {
  const UnitarySet b = named_design("pauli").set;
  for (auto _ : state) benchmark::DoNotOptimize(extend_to_2design(b));
}
BENCHMARK(BM_ExtendTo2Design);

}  // namespace

BENCHMARK_MAIN();
