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
#include "skewlab/rings/linalg.hpp"

namespace {

using namespace skewlab;
using namespace skewlab::rings;
using skewlab::fixtures::example_ring;
using skewlab::fixtures::m2q;
using skewlab::fixtures::rationals;

bool eq(const RingPtr& r, const Value& a, std::string_view b) { return r->equal(a, r->parse(b)); }

TEST(Scalars, RationalArithmetic) {
  const auto q = rationals();
  EXPECT_TRUE(eq(q, q->mul(q->parse("3/4"), q->parse("2/3")), "1/2"));
  EXPECT_TRUE(eq(q, q->add(q->parse("1/3"), q->parse("1/6")), "1/2"));
  EXPECT_EQ(q->render(q->parse("-6/4")), "-3/2");
}

TEST(Scalars, GaussianArithmetic) {
  const auto g = make_field(ScalarField::gaussian());
  // (1+2i)(3-i) = 3 - i + 6i + 2 = 5 + 5i
  EXPECT_TRUE(eq(g, g->mul(g->parse("1+2i"), g->parse("3-i")), "5+5i"));
  const auto inv = g->inverse(g->parse("1+i"));
  ASSERT_TRUE(inv);
  EXPECT_TRUE(eq(g, *inv, "1/2-1/2*i"));
  EXPECT_EQ(g->dimension(), 2u);
}

TEST(Scalars, PrimeField) {
  const auto f7 = make_field(ScalarField::prime(7));
  EXPECT_TRUE(eq(f7, f7->mul(f7->parse("3"), f7->parse("5")), "1"));
  EXPECT_TRUE(eq(f7, f7->parse("10"), "3"));
  EXPECT_TRUE(eq(f7, *f7->inverse(f7->parse("2")), "4"));
  EXPECT_THROW(ScalarField::prime(9), Error);
}

TEST(Polynomials, TruncatedCharacteristicTwo) {
  const auto f = fixtures::f2_truncated();
  const Value t = f->parse("t");
  EXPECT_TRUE(f->is_zero(f->mul(f->parse("t^3"), t)));
  // (t^2 + 1)^2 = t^4 + 1 = 1
  const Value s = f->parse("t^2+1");
  EXPECT_TRUE(eq(f, f->mul(s, s), "1"));
  EXPECT_EQ(f->dimension(), 4u);
  EXPECT_FALSE(f->is_regular(t));
  EXPECT_TRUE(f->inverse(f->parse("1+t")));
}

TEST(Polynomials, MultivariateProduct) {
  const auto p = fixtures::poly_ring(3);
  const Value a = p->parse("y1 + 2*y2");
  const Value b = p->parse("y1 - 2*y2");
  EXPECT_TRUE(eq(p, p->mul(a, b), "y1^2 - 4*y2^2"));
  EXPECT_TRUE(p->is_commutative());
  EXPECT_FALSE(p->dimension());
}

TEST(Matrices, UnitsMultiplyAsExpected) {
  const auto m = m2q();
  EXPECT_TRUE(eq(m, m->mul(m->parse("E12"), m->parse("E21")), "E11"));
  EXPECT_TRUE(m->is_zero(m->mul(m->parse("E12"), m->parse("E12"))));
  EXPECT_TRUE(eq(m, m->parse("[[1,2],[3,4]]"), "E11 + 2*E12 + 3*E21 + 4*E22"));
}

TEST(Matrices, InverseAgainstAdjugate) {
  const auto m = m2q();
  const auto inv = m->inverse(m->parse("[[1,2],[3,4]]"));
  ASSERT_TRUE(inv);
  // adj / det with det = -2
  EXPECT_TRUE(eq(m, *inv, "[[-2,1],[3/2,-1/2]]"));
  EXPECT_FALSE(m->inverse(m->parse("[[1,2],[2,4]]")));
  const auto& mr = static_cast<const MatrixRing&>(*m);
  EXPECT_TRUE(eq(rationals(), mr.det(m->parse("[[1,2],[3,4]]")), "-2"));
}

TEST(Matrices, CenterIsScalars) {
  const auto c = m2q()->center();
  ASSERT_EQ(c.elements.size(), 1u);
  EXPECT_TRUE(eq(m2q(), c.elements[0], "1"));
}

TEST(ConstrainedMatrices, ExampleRingMembership) {
  const auto a = example_ring();
  const auto amb = a->ambient();
  EXPECT_TRUE(a->contains(amb->parse("E11")));
  EXPECT_TRUE(a->contains(amb->parse("E12 + x*E21")));
  EXPECT_FALSE(a->contains(amb->parse("E21")));
  EXPECT_FALSE(a->contains(amb->parse("1/2*E12")));
  EXPECT_TRUE(a->contains(amb->parse("1/2*x*E12")));
  EXPECT_THROW(a->parse("1/2*E11"), Error);
}

TEST(MixedRings, ConstraintAlgebra) {
  const auto c = Constraint::parse("Z+xQ[x]");
  EXPECT_EQ(c.name(), "Z+xQ[x]");
  EXPECT_TRUE(Constraint::parse("Q[x]").includes(c));
  EXPECT_FALSE(Constraint::parse("Z").includes(c));
  EXPECT_EQ((Constraint::parse("Z") * Constraint::parse("xQ[x]")).name(), "xQ[x]");
  const auto r = make_mixed(c);
  EXPECT_TRUE(r->contains(r->ambient()->parse("3 + 1/2*x")));
  EXPECT_FALSE(r->contains(r->ambient()->parse("1/2")));
}

TEST(Products, IdempotentsAndInjection) {
  const auto q = rationals();
  const auto p = make_product({q, q, q});
  const auto& pr = static_cast<const ProductRing&>(*p);
  ASSERT_EQ(pr.idempotents().size(), 3u);
  EXPECT_TRUE(p->is_zero(p->mul(pr.idempotents()[0], pr.idempotents()[1])));
  EXPECT_TRUE(eq(p, pr.inject(1, q->parse("5")), "(0,5,0)"));
  EXPECT_TRUE(eq(p, p->add(p->add(pr.idempotents()[0], pr.idempotents()[1]), pr.idempotents()[2]), "1"));
  try {
    make_product({q, q}, std::vector<Value>{p->parse("(1,0,0)"), p->parse("(1,0,0)")});
    ADD_FAILURE() << "expected BadIdempotents";
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == Errc::BadIdempotents || e.code() == Errc::RingMismatch) << e.what();
  }
}

TEST(Localization, InvertsTwoInExampleRing) {
  const auto a = example_ring();
  const auto loc = localize(a, a->ambient()->parse("2*I"));
  const auto& l = static_cast<const LocalizationRing&>(*loc);
  const Value half_e12 = loc->mul(l.embed(a->parse("E12")), *loc->inverse(l.embed(a->parse("2*I"))));
  EXPECT_FALSE(l.restrict(half_e12));
  EXPECT_TRUE(l.restrict(loc->mul(half_e12, l.embed(a->parse("2*I")))));
  EXPECT_THROW(localize(m2q(), m2q()->parse("E12")), Error);
}

TEST(LinearAlgebra, RankAndNullspace) {
  const Scalar z = Scalar(0);
  ScalarMatrix m(2, 3, z);
  // [[1, 2, 3], [2, 4, 6]] has rank 1 and a 2-dimensional kernel.
  for (std::size_t c = 0; c < 3; ++c) {
    m.at(0, c) = Scalar(static_cast<long>(c + 1));
    m.at(1, c) = Scalar(static_cast<long>(2 * (c + 1)));
  }
  EXPECT_EQ(rank(m), 1u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    for (std::size_t r = 0; r < 2; ++r) {
      Scalar s = z;
      for (std::size_t c = 0; c < 3; ++c) s = s + m.at(r, c) * v[c];
      EXPECT_TRUE(s.is_zero());
    }
  }
}

// Ring axioms on seeded samples across every catalog kind.
class RingLaws : public ::testing::TestWithParam<int> {};

std::vector<RingPtr> catalog_samples() {
  const auto q = rationals();
  return {q,
          make_field(ScalarField::gaussian()),
          make_field(ScalarField::prime(5)),
          fixtures::poly_ring(2),
          fixtures::f2_truncated(),
          make_mixed(Constraint::parse("Z[1/2]+xQ[x]")),
          m2q(),
          make_matrix(fixtures::poly_ring(1), 2),
          example_ring(),
          make_product({q, fixtures::poly_ring(1)}),
          localize(fixtures::poly_ring(1), fixtures::poly_ring(1)->parse("y1"))};
}

TEST_P(RingLaws, AssociativeDistributiveUnital) {
  const RingPtr r = catalog_samples().at(static_cast<std::size_t>(GetParam()));
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Value a = r->random(rng);
    const Value b = r->random(rng);
    const Value c = r->random(rng);
    EXPECT_TRUE(r->equal(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c)))) << r->descriptor();
    EXPECT_TRUE(r->equal(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)))) << r->descriptor();
    EXPECT_TRUE(r->equal(r->mul(r->one(), a), a));
    EXPECT_TRUE(r->is_zero(r->add(a, r->neg(a))));
    EXPECT_TRUE(r->contains(r->mul(a, b)));
  }
}

TEST_P(RingLaws, RenderParseRoundTrip) {
  const RingPtr r = catalog_samples().at(static_cast<std::size_t>(GetParam()));
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    const Value a = r->random(rng);
    EXPECT_TRUE(r->equal(r->parse(r->render(a)), a)) << r->descriptor() << ": " << r->render(a);
  }
}

TEST_P(RingLaws, CoordinatesRoundTrip) {
  const RingPtr r = catalog_samples().at(static_cast<std::size_t>(GetParam()));
  Rng rng(13);
  if (!r->dimension()) {
    try {
      r->coords(r->random(rng));
      ADD_FAILURE() << r->descriptor();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Unsupported);
    }
    return;
  }
  for (int i = 0; i < 20; ++i) {
    const Value a = r->random(rng);
    const auto c = r->coords(a);
    EXPECT_EQ(c.size(), *r->dimension());
    EXPECT_TRUE(r->equal(r->from_coords(c), a));
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, RingLaws, ::testing::Range(0, 11));

TEST(Literals, Errors) {
  const auto m = m2q();
  try {
    m->parse("E13");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadLiteral);
  }
  EXPECT_THROW(rationals()->parse("1/0"), Error);
  EXPECT_THROW(rationals()->parse("2 +"), Error);
}

}  // namespace
