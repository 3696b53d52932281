// Copyright 2026 The skewlab Authors
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

#include "skewlab/centerlab/centerlab.hpp"
#include "skewlab/pilab/replay.hpp"

namespace {

using namespace skewlab;

void BM_KernelChainTruncatedShift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  const auto p = rings::make_polynomial(rings::ScalarField::rationals(), vars);
  const auto sigma = twists::shift(p);
  for (auto _ : state) benchmark::DoNotOptimize(centerlab::kernel_chain(sigma, 64));
}
BENCHMARK(BM_KernelChainTruncatedShift)->Arg(4)->Arg(16)->Arg(32);

void BM_SemisimplePipeline(benchmark::State& state) {
  const auto m2 = rings::make_matrix(rings::make_field(rings::ScalarField::rationals()), 2);
  const auto sigma = twists::inner(m2, m2->parse("diag(1,2)"));
  const auto delta = twists::zero_derivation(sigma);
  for (auto _ : state) benchmark::DoNotOptimize(centerlab::pi_decide_pipeline(sigma, delta));
}
BENCHMARK(BM_SemisimplePipeline)->Unit(benchmark::kMillisecond);

void BM_Replay(benchmark::State& state, const char* id) {
  for (auto _ : state) benchmark::DoNotOptimize(pilab::replay(id));
}
BENCHMARK_CAPTURE(BM_Replay, truncated_shift_2, "ex-4.8-truncated-shift(2)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Replay, conjugation_3, "ex-3.9-conjugation(3)")->Unit(benchmark::kMillisecond);

}  // namespace
