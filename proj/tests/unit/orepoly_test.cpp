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

namespace {

using namespace skewlab;
using ore::OreContext;
using ore::OrePoly;
using rings::Value;

// (Σ a_i x^i)(Σ b_j x^j) = Σ a_i σ^i(b_j) x^{i+j} when δ = 0.
OrePoly graded_oracle(const OrePoly& f, const OrePoly& g) {
  const auto& ctx = f.context();
  const auto& r = *ctx->ring();
  if (f.degree() < 0 || g.degree() < 0) return OrePoly::zero(ctx);
  std::vector<Value> c(static_cast<std::size_t>(f.degree() + g.degree() + 1), r.zero());
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      const Value t = r.mul(f.coeff(i), ctx->sigma().apply_power(g.coeff(j), static_cast<std::uint32_t>(i)));
      c[static_cast<std::size_t>(i + j)] = r.add(c[static_cast<std::size_t>(i + j)], t);
    }
  }
  return OrePoly(ctx, c);
}

// x^i b = Σ_k C(i,k) δ^k(b) x^{i-k} when σ = id.
OrePoly binomial_oracle(const OrePoly& f, const OrePoly& g) {
  const auto& ctx = f.context();
  const auto& r = *ctx->ring();
  if (f.degree() < 0 || g.degree() < 0) return OrePoly::zero(ctx);
  std::vector<Value> c(static_cast<std::size_t>(f.degree() + g.degree() + 1), r.zero());
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      Value d = g.coeff(j);
      long binom = 1;
      for (int k = 0; k <= i; ++k) {
        const Value term = r.mul(f.coeff(i), r.scale(rings::Scalar(binom), d));
        const auto slot = static_cast<std::size_t>(i - k + j);
        c[slot] = r.add(c[slot], term);
        d = ctx->delta()(d);
        binom = binom * (i - k) / (k + 1);
      }
    }
  }
  return OrePoly(ctx, c);
}

TEST(OreRelation, XTimesGenerator) {
  for (const auto& nc : fixtures::law_contexts()) {
    const auto& ctx = nc.ctx;
    for (const Value& a : ctx->ring()->generators()) {
      const OrePoly lhs = OrePoly::x(ctx) * OrePoly::constant(ctx, a);
      const OrePoly rhs = OrePoly::monomial(ctx, ctx->sigma()(a), 1) + OrePoly::constant(ctx, ctx->delta()(a));
      EXPECT_EQ(lhs, rhs) << nc.name;
    }
  }
}

TEST(OreMul, MatchesGradedOracle) {
  const auto m = fixtures::m2q();
  const auto s = twists::inner(m, m->parse("[[2,1],[0,1]]"));
  const auto ctx = OreContext::make(s, twists::zero_derivation(s));
  rings::Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const OrePoly f = ore::random_ore(ctx, rng, 3);
    const OrePoly g = ore::random_ore(ctx, rng, 3);
    EXPECT_EQ(f * g, graded_oracle(f, g));
  }
}

TEST(OreMul, MatchesBinomialOracle) {
  const auto q = fixtures::poly_ring(1);
  const auto id = twists::identity(q);
  const auto ctx = OreContext::make(id, twists::partial_derivative(id, 0));
  rings::Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    const OrePoly f = ore::random_ore(ctx, rng, 3);
    const OrePoly g = ore::random_ore(ctx, rng, 3);
    EXPECT_EQ(f * g, binomial_oracle(f, g));
  }
}

TEST(OreMul, WeylRelation) {
  const auto q = fixtures::poly_ring(1);
  const auto id = twists::identity(q);
  const auto ctx = OreContext::make(id, twists::partial_derivative(id, 0));
  // [x, y1] = 1 in the first Weyl algebra.
  EXPECT_EQ(ore::ore_commutator(OrePoly::x(ctx), ore::parse_ore(ctx, "y1")).to_string(), "1");
}

TEST(OreMul, RingLawsInEveryContext) {
  for (const auto& nc : fixtures::law_contexts()) {
    rings::Rng rng(5);
    for (int i = 0; i < 25; ++i) {
      const OrePoly f = ore::random_ore(nc.ctx, rng, 2);
      const OrePoly g = ore::random_ore(nc.ctx, rng, 2);
      const OrePoly h = ore::random_ore(nc.ctx, rng, 2);
      EXPECT_EQ((f * g) * h, f * (g * h)) << nc.name;
      EXPECT_EQ(f * (g + h), f * g + f * h) << nc.name;
      EXPECT_EQ((f + g) * h, f * h + g * h) << nc.name;
      EXPECT_EQ(f * OrePoly::constant(nc.ctx, nc.ctx->ring()->one()), f);
    }
  }
}

TEST(OreMul, PowerMatchesRepeatedProduct) {
  for (const auto& nc : fixtures::law_contexts()) {
    rings::Rng rng(6);
    const OrePoly f = ore::random_ore(nc.ctx, rng, 2);
    EXPECT_EQ(f.pow(3), f * f * f) << nc.name;
    EXPECT_EQ(f.pow(0), OrePoly::constant(nc.ctx, nc.ctx->ring()->one()));
  }
}

TEST(Rendering, RoundTripAndShape) {
  for (const auto& nc : fixtures::law_contexts()) {
    rings::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
      const OrePoly f = ore::random_ore(nc.ctx, rng, 3);
      EXPECT_EQ(ore::parse_ore(nc.ctx, f.to_string()), f) << nc.name << ": " << f.to_string();
    }
  }
  const auto k = fixtures::law_contexts()[4].ctx;
  EXPECT_EQ(ore::parse_ore(k, "(y1 + y2)*x^2 - x + 3").to_string(), "3 - x + (y1 + y2)*x^2");
  EXPECT_EQ(OrePoly::zero(k).to_string(), "0");
  EXPECT_EQ(OrePoly::zero(k).degree(), -1);
}

TEST(Rendering, ExampleRingUsesY) {
  const auto ctx = fixtures::law_contexts()[1].ctx;
  EXPECT_EQ(ctx->var(), "y");
  EXPECT_EQ(ore::parse_ore(ctx, "E12*y^2").degree(), 2);
}

TEST(Parsing, Errors) {
  const auto ctx = fixtures::law_contexts()[4].ctx;
  try {
    ore::parse_ore(ctx, "x^-1");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadLiteral);
  }
  EXPECT_THROW(ore::parse_ore(ctx, "y1/x"), Error);
  EXPECT_THROW(ore::parse_ore(ctx, "y9*x"), Error);
}

TEST(Contexts, MismatchIsRejected) {
  const auto cs = fixtures::law_contexts();
  const OrePoly a = OrePoly::x(cs[0].ctx);
  const OrePoly b = OrePoly::x(cs[4].ctx);
  try {
    (void)(a * b);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
  const auto s = cs[0].ctx->sigma();
  EXPECT_THROW(OreContext::make(twists::identity(fixtures::m2q()), twists::zero_derivation(s)), Error);
}

TEST(GradedLead, DomainDegreeAdds) {
  const auto p = fixtures::poly_ring(2);
  const auto v = twists::variable_map(p, {p->parse("2*y1"), p->parse("y1 + y2")});
  const auto ctx = OreContext::make(v, twists::zero_derivation(v));
  rings::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const OrePoly f = ore::random_ore(ctx, rng, 3);
    const OrePoly g = ore::random_ore(ctx, rng, 3);
    const auto rep = ore::graded_lead_check(f, g);
    EXPECT_TRUE(rep.pass) << f.to_string() << " | " << g.to_string() << " lead " << rep.lead_matches << " graded "
                          << rep.graded_matches << " deg " << rep.product_degree;
    if (f.degree() >= 0 && g.degree() >= 0) {
      EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    }
  }
}

TEST(GradedLead, DegreeDropWhenLeadProductVanishes) {
  const auto ctx = fixtures::law_contexts()[4].ctx;
  // x·y1 = σ(y1)x = 0: the expected leading coefficient vanishes.
  const auto rep = ore::graded_lead_check(OrePoly::x(ctx), ore::parse_ore(ctx, "y1"));
  EXPECT_TRUE(rep.pass);
  EXPECT_FALSE(rep.expected_nonzero);
  EXPECT_LT(rep.product_degree, 1);
}

TEST(GradedLead, MatrixZeroDivisors) {
  const auto ctx = fixtures::law_contexts()[0].ctx;
  const auto rep = ore::graded_lead_check(ore::parse_ore(ctx, "E11*x"), ore::parse_ore(ctx, "E21*x"));
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.lead_matches);
}

}  // namespace
