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

#include "skewlab/ore/orepoly.hpp"

namespace {

using namespace skewlab;

ore::ContextPtr matrix_context() {
  const auto m2 = rings::make_matrix(rings::make_field(rings::ScalarField::rationals()), 2);
  const auto sigma = twists::inner(m2, m2->parse("[[0,1],[1,0]]"));
  return ore::OreContext::make(sigma, twists::inner_derivation(sigma, m2->parse("[[1,2],[0,1]]")));
}

ore::ContextPtr shift_context() {
  const auto p = rings::make_polynomial(rings::ScalarField::rationals(), {"y1", "y2", "y3", "y4"});
  const auto sigma = twists::shift(p);
  return ore::OreContext::make(sigma, twists::zero_derivation(sigma));
}

void BM_OreMulMatrix(benchmark::State& state) {
  const auto ctx = matrix_context();
  rings::Rng rng(1);
  const auto f = ore::random_ore(ctx, rng, static_cast<std::uint32_t>(state.range(0)));
  const auto g = ore::random_ore(ctx, rng, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ore::ore_mul(f, g));
}
BENCHMARK(BM_OreMulMatrix)->Arg(2)->Arg(4)->Arg(8);

void BM_OreMulShift(benchmark::State& state) {
  const auto ctx = shift_context();
  rings::Rng rng(2);
  const auto f = ore::random_ore(ctx, rng, static_cast<std::uint32_t>(state.range(0)));
  const auto g = ore::random_ore(ctx, rng, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ore::ore_mul(f, g));
}
BENCHMARK(BM_OreMulShift)->Arg(2)->Arg(4);

void BM_ParseOre(benchmark::State& state) {
  const auto ctx = matrix_context();
  for (auto _ : state) benchmark::DoNotOptimize(ore::parse_ore(ctx, "[[1,2],[3,4]]*x^3 - [[0,1],[1,0]]*x + 5"));
}
BENCHMARK(BM_ParseOre);

}  // namespace
