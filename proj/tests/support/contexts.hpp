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

#ifndef SKEWLAB_TESTS_SUPPORT_CONTEXTS_HPP
#define SKEWLAB_TESTS_SUPPORT_CONTEXTS_HPP

#include <string>
#include <vector>

#include "skewlab/error.hpp"
#include "skewlab/ore/orepoly.hpp"

namespace skewlab::fixtures {

inline rings::RingPtr rationals() { return rings::make_field(rings::ScalarField::rationals()); }

inline rings::RingPtr m2q() { return rings::make_matrix(rationals(), 2); }

/// {[[a, b], [c, d]] : a, b, d ∈ Z+xQ[x], c ∈ xQ[x]}.
inline rings::RingPtr example_ring() {
  using rings::Constraint;
  return rings::make_constrained_matrix(2, {Constraint::parse("Z+xQ[x]"), Constraint::parse("Z+xQ[x]"),
                                            Constraint::parse("xQ[x]"), Constraint::parse("Z+xQ[x]")});
}

inline rings::RingPtr poly_ring(std::size_t n, const rings::ScalarField& field = rings::ScalarField::rationals()) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return rings::make_polynomial(field, vars);
}

inline rings::RingPtr f2_truncated() { return rings::make_polynomial(rings::ScalarField::prime(2), {"t"}, {4}); }

struct NamedContext {
  std::string name;
  ore::ContextPtr ctx;
};

/// The five Ore contexts of the associativity suite.
inline std::vector<NamedContext> law_contexts() {
  std::vector<NamedContext> out;
  {
    const auto m2 = m2q();
    const auto s = twists::inner(m2, m2->parse("[[1,1],[0,2]]"));
    out.push_back({"M_2(Q)[x; inner]", ore::OreContext::make(s, twists::zero_derivation(s))});
  }
  {
    const auto a = example_ring();
    const auto s = twists::inner(a, a->ambient()->parse("diag(1,2)"), a->ambient());
    out.push_back({"A[y; inner diag(1,2)]", ore::OreContext::make(s, twists::zero_derivation(s))});
  }
  {
    const auto q2 = rings::make_product({rationals(), rationals()});
    const auto s = twists::component_permutation(q2, {1, 0});
    out.push_back({"(Q+Q)[x; swap, inner]", ore::OreContext::make(s, twists::inner_derivation(s, q2->parse("(1,0)")))});
  }
  {
    const auto f = f2_truncated();
    const auto id = twists::identity(f);
    out.push_back({"F_2[t]/(t^4)[x; d/dt]", ore::OreContext::make(id, twists::partial_derivative(id, 0))});
  }
  {
    const auto k3 = poly_ring(3);
    const auto s = twists::shift(k3);
    out.push_back({"Q[y1,y2,y3][x; shift]", ore::OreContext::make(s, twists::zero_derivation(s))});
  }
  return out;
}

}  // namespace skewlab::fixtures

#endif  // SKEWLAB_TESTS_SUPPORT_CONTEXTS_HPP
