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

#include "skewlab/pilab/identities.hpp"

namespace {

using namespace skewlab;

std::vector<rings::RingElem> matrices(std::size_t count) {
  const auto m3 = rings::make_matrix(rings::make_field(rings::ScalarField::rationals()), 3);
  rings::Rng rng(7);
  std::vector<rings::RingElem> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(m3, m3->random(rng));
  return out;
}

void BM_StandardDp(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto elems = matrices(m);
  for (auto _ : state) benchmark::DoNotOptimize(pilab::standard_identity_eval<rings::RingElem>(m, elems));
}
BENCHMARK(BM_StandardDp)->DenseRange(3, 6);

void BM_StandardBruteForce(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto elems = matrices(m);
  for (auto _ : state) benchmark::DoNotOptimize(pilab::standard_identity_bruteforce<rings::RingElem>(m, elems));
}
BENCHMARK(BM_StandardBruteForce)->DenseRange(3, 6);

void BM_ExhaustiveS4OnM2(benchmark::State& state) {
  const auto m2 = rings::make_matrix(rings::make_field(rings::ScalarField::rationals()), 2);
  pilab::SearchOptions opt;
  opt.exhaustive = true;
  opt.budget = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pilab::identity_search(m2, pilab::IdentitySpec::standard(4), opt));
  }
}
BENCHMARK(BM_ExhaustiveS4OnM2)->Unit(benchmark::kMillisecond);

}  // namespace
