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
#include "skewlab/centerlab/centerlab.hpp"

namespace {

using namespace skewlab;
using namespace skewlab::centerlab;
using ore::OreContext;
using ore::OrePoly;
using rings::RingPtr;
using rings::Value;

bool eq(const RingPtr& r, const Value& a, std::string_view b) { return r->equal(a, r->parse(b)); }

ore::ContextPtr swap_context() {
  const auto m = fixtures::m2q();
  const auto s = twists::inner(m, m->parse("antidiag(1,1)"));
  return OreContext::make(s, twists::zero_derivation(s));
}

TEST(Centrality, FixedWitnessTimesX) {
  const auto ctx = swap_context();
  const auto rep = is_central(ore::parse_ore(ctx, "antidiag(1,1)*x"));
  EXPECT_TRUE(rep.central);
  EXPECT_TRUE(rep.criteria.applicable);
  EXPECT_TRUE(rep.criteria.sigma_fixed);
  EXPECT_TRUE(rep.criteria.twisted_commute);
  EXPECT_TRUE(rep.criteria.regular);
  EXPECT_TRUE(rep.generators_complete);
}

TEST(Centrality, XIsNotCentralForNontrivialSigma) {
  const auto m = fixtures::m2q();
  const auto s = twists::inner(m, m->parse("diag(1,2)"));
  const auto ctx = OreContext::make(s, twists::zero_derivation(s));
  const auto rep = is_central(OrePoly::x(ctx));
  EXPECT_FALSE(rep.central);
  ASSERT_TRUE(rep.counterexample);
  ASSERT_TRUE(rep.commutator);
  EXPECT_FALSE(rep.commutator->is_zero());
  // The witness really fails to commute with f.
  const OrePoly g = ore::parse_ore(ctx, *rep.counterexample);
  EXPECT_EQ(ore::ore_commutator(OrePoly::x(ctx), g), *rep.commutator);
}

TEST(Centrality, VerdictAgreesWithRandomCommutators) {
  const auto ctx = swap_context();
  rings::Rng rng(21);
  const std::vector<std::string> candidates = {"antidiag(1,1)*x", "x^2", "x", "E11*x^2", "3 + x^2", "antidiag(1,1)*x^3"};
  for (const auto& text : candidates) {
    const OrePoly f = ore::parse_ore(ctx, text);
    const bool central = is_central(f).central;
    bool all = true;
    for (int i = 0; i < 100; ++i) all = all && ore::ore_commutator(f, ore::random_ore(ctx, rng, 2)).is_zero();
    if (central) {
      EXPECT_TRUE(all) << text;
    } else {
      EXPECT_FALSE(all) << text;
    }
  }
}

TEST(Centrality, RepresentativeGeneratorsAreFlagged) {
  const auto a = fixtures::example_ring();
  const auto s = twists::inner(a, a->ambient()->parse("diag(1,2)"), a->ambient());
  const auto ctx = OreContext::make(s, twists::zero_derivation(s));
  EXPECT_FALSE(is_central(ore::parse_ore(ctx, "y")).generators_complete);
}

TEST(LeadingCriteria, ConstantsAreNotApplicable) {
  const auto ctx = swap_context();
  EXPECT_FALSE(central_leading_checks(ore::parse_ore(ctx, "E11")).applicable);
  const auto c = central_leading_checks(ore::parse_ore(ctx, "E11*x"));
  EXPECT_TRUE(c.applicable);
  EXPECT_FALSE(c.regular);
}

TEST(SemiInvariance, TruncatedDerivation) {
  const auto f = fixtures::f2_truncated();
  const auto id = twists::identity(f);
  const auto ctx = OreContext::make(id, twists::partial_derivative(id, 0));
  const auto x2 = semi_invariant_solve(ore::parse_ore(ctx, "x^2"));
  EXPECT_TRUE(x2.semi_invariant);
  for (const auto& [a, b] : x2.witnesses) {
    const OrePoly p = ore::parse_ore(ctx, "x^2");
    EXPECT_EQ(p * OrePoly::constant(ctx, a), OrePoly::constant(ctx, b) * p);
  }
  const auto x1 = semi_invariant_solve(OrePoly::x(ctx));
  EXPECT_FALSE(x1.semi_invariant);
  EXPECT_TRUE(x1.failure);
}

TEST(QuasiAlgebraic, InnerDerivationAtOrderOne) {
  const auto m = fixtures::m2q();
  const auto s = twists::inner(m, m->parse("diag(1,2)"));
  const auto d = twists::inner_derivation(s, m->parse("E12 + E21"));
  const auto w = quasi_algebraic_solve(d, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->n, 1u);
  EXPECT_TRUE(w->verified);
  EXPECT_TRUE(verify_quasi_algebraic(d, *w));
}

TEST(QuasiAlgebraic, FormalDerivativeInCharacteristicTwo) {
  const auto f = fixtures::f2_truncated();
  const auto id = twists::identity(f);
  const auto d = twists::partial_derivative(id, 0);
  const auto w = quasi_algebraic_solve(d, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->n, 2u);
  EXPECT_TRUE(f->is_zero(w->b));
  // Independent check: δ² = 0 on the basis 1, t, t², t³.
  for (const char* b : {"1", "t", "t^2", "t^3"}) EXPECT_TRUE(f->is_zero(d(d(f->parse(b)))));
}

TEST(QuasiAlgebraic, TamperedWitnessFailsVerification) {
  const auto f = fixtures::f2_truncated();
  const auto id = twists::identity(f);
  const auto d = twists::partial_derivative(id, 0);
  auto w = *quasi_algebraic_solve(d, 4);
  w.a.back() = f->zero();
  w.a.front() = f->one();
  EXPECT_FALSE(verify_quasi_algebraic(d, w));
}

TEST(Orbits, ThreeCycle) {
  const auto q = fixtures::rationals();
  const auto p = rings::make_product({q, q, q});
  const auto c = twists::component_permutation(p, {1, 2, 0});
  const auto dec = orbit_decompose(p, c, twists::zero_derivation(c));
  EXPECT_EQ(dec.rho, (std::vector<std::size_t>{1, 2, 0}));
  ASSERT_EQ(dec.orbits.size(), 1u);
  EXPECT_EQ(dec.orbits[0].size(), 3u);
  EXPECT_TRUE(dec.sigma_flag);
  EXPECT_TRUE(dec.delta_flag);
}

TEST(Orbits, SwapWithInnerDerivation) {
  const auto q = fixtures::rationals();
  const auto p = rings::make_product({q, q});
  const auto s = twists::component_permutation(p, {1, 0});
  const auto d = twists::inner_derivation(s, p->parse("(1,0)"));
  const auto dec = orbit_decompose(p, s, d);
  EXPECT_TRUE(dec.delta_flag);
  const auto b = inner_delta_witness(dec, 0);
  ASSERT_TRUE(b);
  EXPECT_TRUE(eq(dec.blocks[0], *b, "(1,0)"));
}

TEST(Orbits, MixedOrbitSizes) {
  const auto q = fixtures::rationals();
  const auto p = rings::make_product({q, q, q, q});
  const auto s = twists::component_permutation(p, {1, 0, 2, 3});
  const auto dec = orbit_decompose(p, s, twists::zero_derivation(s));
  EXPECT_EQ(dec.orbits.size(), 3u);
  EXPECT_THROW(orbit_decompose(fixtures::m2q(), twists::identity(fixtures::m2q()),
                               twists::zero_derivation(twists::identity(fixtures::m2q()))),
               Error);
}

TEST(Udim, ConjugationDoublesDimension) {
  const auto g = rings::make_field(rings::ScalarField::gaussian());
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto p = rings::make_product(std::vector<RingPtr>(n, g));
    const auto c = twists::conjugation(p);
    EXPECT_EQ(udim_over_fixed(c, twists::zero_derivation(c)).total, 2 * n);
  }
}

TEST(Udim, RelabellingComponentsPreservesUdim) {
  const auto q = fixtures::rationals();
  const auto p = rings::make_product({q, q, q, q});
  const std::vector<std::vector<std::size_t>> perms = {{1, 0, 2, 3}, {1, 2, 3, 0}, {0, 1, 2, 3}};
  // Conjugating σ by a relabelling π must not change the answer.
  const std::vector<std::size_t> pi = {2, 0, 3, 1};
  std::vector<std::size_t> pi_inv(4);
  for (std::size_t i = 0; i < 4; ++i) pi_inv[pi[i]] = i;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto s = twists::component_permutation(p, perms[k]);
    std::vector<std::size_t> conj(4);
    for (std::size_t i = 0; i < 4; ++i) conj[i] = pi[perms[k][pi_inv[i]]];
    const auto t = twists::component_permutation(p, conj);
    const auto a = udim_over_fixed(s, twists::zero_derivation(s)).total;
    const auto b = udim_over_fixed(t, twists::zero_derivation(t)).total;
    EXPECT_EQ(a, b);
    // Each orbit of size s contributes Q^s over its diagonal copy of Q.
    EXPECT_EQ(a, 4u);
  }
}

TEST(KernelChain, ShiftStabilizesAtAllVariables) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = fixtures::poly_ring(n);
    const auto rep = kernel_chain(twists::shift(p), 16);
    EXPECT_TRUE(rep.stabilized);
    EXPECT_EQ(rep.n, n);
    ASSERT_GT(rep.kernels.size(), n);
    EXPECT_EQ(rep.kernels[n].size(), n);
    // ker σ^k ⊆ ker σ^{k+1}
    for (std::size_t k = 0; k + 1 < rep.kernels.size(); ++k) {
      for (std::size_t v : rep.kernels[k]) {
        EXPECT_NE(std::find(rep.kernels[k + 1].begin(), rep.kernels[k + 1].end(), v), rep.kernels[k + 1].end());
      }
    }
  }
}

TEST(KernelChain, UnboundedFamilyDoesNotStabilize) {
  const auto p = rings::make_polynomial(rings::ScalarField::rationals(), {"y1", "y2", "y3"}, {}, true);
  const auto rep = kernel_chain(twists::shift(p), 8);
  EXPECT_FALSE(rep.stabilized);
  EXPECT_TRUE(rep.unbounded_family);
}

TEST(Pipeline, NoetherianShiftIsPi) {
  const auto p = fixtures::poly_ring(3);
  const auto s = twists::shift(p);
  const auto rep = pi_decide_pipeline(s, twists::zero_derivation(s));
  EXPECT_EQ(rep.path, "noetherian");
  EXPECT_EQ(rep.verdict, "PI");
  EXPECT_EQ(rep.nilpotency_exponent, 4u);
}

TEST(Pipeline, SemisimpleInnerIsPi) {
  const auto m = fixtures::m2q();
  const auto s = twists::inner(m, m->parse("diag(1,2)"));
  const auto rep = pi_decide_pipeline(s, twists::zero_derivation(s));
  EXPECT_EQ(rep.path, "semisimple");
  EXPECT_EQ(rep.verdict, "PI");
  EXPECT_TRUE(rep.certificate_verified);
}

TEST(Pipeline, InfiniteOrderIsNotPi) {
  const auto p = fixtures::poly_ring(1);
  const auto s = twists::variable_map(p, {p->parse("2*y1")});
  const auto rep = pi_decide_pipeline(s, twists::zero_derivation(s));
  EXPECT_EQ(rep.verdict, "not-PI");
}

TEST(Pipeline, UnboundedFamilyIsOutOfCatalog) {
  const auto p = rings::make_polynomial(rings::ScalarField::rationals(), {"y1", "y2", "y3"}, {}, true);
  const auto s = twists::shift(p);
  try {
    pi_decide_pipeline(s, twists::zero_derivation(s));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfCatalog);
  }
}

TEST(Jordan, ExampleRingLevels) {
  const auto a = fixtures::example_ring();
  const auto amb = a->ambient();
  const auto s = twists::inner(a, amb->parse("diag(1,2)"), amb);
  const auto rep = jordan_closure_probe(s, {amb->parse("1/2*E12"), amb->parse("1/2*E21"), amb->parse("E11")}, 5);
  ASSERT_EQ(rep.probes.size(), 3u);
  EXPECT_EQ(rep.probes[0].level, 1u);
  EXPECT_EQ(rep.probes[1].level, std::nullopt);
  EXPECT_EQ(rep.probes[2].level, 0u);
  EXPECT_TRUE(rep.chain_ascending);
}

}  // namespace
