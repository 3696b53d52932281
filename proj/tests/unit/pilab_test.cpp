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

#include <gtest/gtest.h>

#include "contexts.hpp"
#include "skewlab/pilab/identities.hpp"
#include "skewlab/pilab/replay.hpp"

namespace {

using namespace skewlab;
using namespace skewlab::pilab;
using ore::OrePoly;
using rings::RingElem;

std::vector<RingElem> random_matrices(std::size_t n, std::size_t count, std::uint64_t seed) {
  const auto m = rings::make_matrix(fixtures::rationals(), n);
  rings::Rng rng(seed);
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(m, m->random(rng));
  return out;
}

TEST(IdentitySpec, NamesRoundTrip) {
  for (const auto& s : {IdentitySpec::standard(3), IdentitySpec::standard_power(2, 2), IdentitySpec::commutator_power(3)}) {
    EXPECT_EQ(IdentitySpec::parse(s.name()).name(), s.name());
  }
  EXPECT_EQ(IdentitySpec::standard(4).name(), "S_4");
  EXPECT_EQ(IdentitySpec::commutator_power(2).name(), "[x1,x2]^2");
  EXPECT_THROW(IdentitySpec::parse("T_3"), Error);
}

TEST(StandardIdentity, SmallArityClosedForms) {
  const auto e = random_matrices(2, 3, 1);
  const auto& [a, b, c] = std::tie(e[0], e[1], e[2]);
  EXPECT_EQ(standard_identity_eval<RingElem>(2, std::vector{a, b}), a * b - b * a);
  const RingElem s3 = a * b * c - a * c * b - b * a * c + b * c * a + c * a * b - c * b * a;
  EXPECT_EQ(standard_identity_eval<RingElem>(3, e), s3);
}

TEST(StandardIdentity, DynamicProgramMatchesBruteForce) {
  for (std::uint32_t m = 2; m <= 6; ++m) {
    const auto e = random_matrices(3, m, 100 + m);
    EXPECT_EQ(standard_identity_eval<RingElem>(m, e), standard_identity_bruteforce<RingElem>(m, e)) << m;
  }
}

TEST(StandardIdentity, AlternatingAndMultilinear) {
  auto e = random_matrices(3, 4, 7);
  // Repeating an argument gives zero.
  auto rep = e;
  rep[2] = rep[0];
  EXPECT_TRUE(standard_identity_eval<RingElem>(4, rep).is_zero());
  // Swapping two arguments flips the sign.
  auto sw = e;
  std::swap(sw[1], sw[3]);
  EXPECT_EQ(standard_identity_eval<RingElem>(4, sw), -standard_identity_eval<RingElem>(4, e));
  // Additive in the first slot.
  const auto extra = random_matrices(3, 1, 8)[0];
  auto sum = e;
  sum[0] = e[0] + extra;
  auto other = e;
  other[0] = extra;
  EXPECT_EQ(standard_identity_eval<RingElem>(4, sum),
            standard_identity_eval<RingElem>(4, e) + standard_identity_eval<RingElem>(4, other));
}

TEST(StandardIdentity, AmitsurLevitzkiOnRandomSamples) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(standard_identity_eval<RingElem>(4, random_matrices(2, 4, seed)).is_zero());
  }
  EXPECT_FALSE(standard_identity_eval<RingElem>(3, random_matrices(2, 3, 99)).is_zero());
}

TEST(StandardIdentity, ArityGuards) {
  const auto e = random_matrices(2, 7, 3);
  try {
    standard_identity_eval<RingElem>(7, e);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::BudgetExceeded);
  }
  try {
    standard_identity_eval<RingElem>(3, std::vector(e.begin(), e.begin() + 2));
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::ArityMismatch);
  }
}

TEST(Search, ExhaustiveMatrixUnits) {
  const auto m2 = fixtures::m2q();
  SearchOptions opt;
  opt.exhaustive = true;
  opt.budget = 100000;
  const auto s4 = identity_search(m2, IdentitySpec::standard(4), opt);
  EXPECT_EQ(s4.outcome, "no-counterexample-found");
  EXPECT_EQ(s4.tried, 256u);
  const auto s3 = identity_search(m2, IdentitySpec::standard(3), opt);
  EXPECT_EQ(s3.outcome, "counterexample");
  EXPECT_TRUE(s3.reverified);
  // Re-evaluating the reported witness in the caller reproduces the value.
  std::vector<RingElem> w;
  for (const auto& t : s3.witness) w.emplace_back(m2, m2->parse(t));
  EXPECT_EQ(standard_identity_eval<RingElem>(3, w).to_string(), s3.value);
}

TEST(Search, BudgetIsReported) {
  SearchOptions opt;
  opt.exhaustive = true;
  opt.budget = 10;
  EXPECT_EQ(identity_search(fixtures::m2q(), IdentitySpec::standard(4), opt).outcome, "budget-exceeded");
}

TEST(Search, SampledIsDeterministic) {
  const auto ctx = fixtures::law_contexts()[4].ctx;
  SearchOptions opt;
  opt.budget = 50;
  opt.seed = 3;
  const auto a = identity_search(ctx, IdentitySpec::standard(2), opt);
  const auto b = identity_search(ctx, IdentitySpec::standard(2), opt);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.index, b.index);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Search, CommutativeRingsSatisfyS2) {
  SearchOptions opt;
  opt.budget = 200;
  EXPECT_EQ(identity_search(fixtures::poly_ring(3), IdentitySpec::standard(2), opt).outcome, "no-counterexample-found");
}

TEST(CommutatorPower, TruncatedShiftNilpotency) {
  const auto p = rings::make_polynomial(rings::ScalarField::rationals(), {"y1", "y2"}, {2, 2});
  const auto s = twists::shift(p);
  const auto ctx = ore::OreContext::make(s, twists::zero_derivation(s));
  SearchOptions opt;
  opt.budget = 300;
  EXPECT_EQ(commutator_power_check(ctx, 3, opt).outcome, "no-counterexample-found");
  opt.exhaustive = true;
  opt.budget = 100000;
  EXPECT_EQ(commutator_power_check(ctx, 2, opt).outcome, "counterexample");
}

TEST(Replay, SuiteEntriesPass) {
  for (const auto& id : replay_suite()) {
    const auto rep = replay(id);
    EXPECT_TRUE(rep.pass) << id;
    EXPECT_FALSE(rep.checks.empty()) << id;
  }
}

TEST(Replay, ConstrainedMatrixHasFiveChecks) { EXPECT_EQ(replay("ex-2.1").checks.size(), 5u); }

TEST(Replay, InfiniteShiftStandardValue) {
  const auto rep = replay("ex-4.9-infinite-shift(2,1,3)");
  ASSERT_TRUE(rep.observations.contains("standard-value"));
  EXPECT_EQ(rep.observations["standard-value"], "(-y2*y4 + y3^2)*x^2");
}

TEST(Replay, UnknownIds) {
  for (const char* id : {"ex-9.9", "ex-4.8-truncated-shift(1,2)", "ex-2.1(3)", "ex-4.9-infinite-shift(2,1)"}) {
    try {
      replay(id);
      ADD_FAILURE() << id;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::UnknownExample) << id;
    }
  }
}

TEST(Replay, FixtureSchema) {
  const auto& f = replay_fixture();
  EXPECT_EQ(f["schema"], "skewlab-replays/1");
  EXPECT_EQ(replay_suite().size(), f["suite"].size());
}

}  // namespace
