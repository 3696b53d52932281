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

#include "skewlab/centerlab/centerlab.hpp"

#include "skewlab/error.hpp"

namespace skewlab::centerlab {

using rings::Ring;
using rings::RingKind;

namespace {

// Rings built from non-finitely-generated constraints expose a representative
// generator list only.
bool generators_span(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Mixed:
    case RingKind::ConstrainedMatrix: return false;
    case RingKind::Matrix: return generators_span(*static_cast<const rings::MatrixRing&>(ring).base());
    case RingKind::Localization: return generators_span(*static_cast<const rings::LocalizationRing&>(ring).base());
    case RingKind::Product:
      for (const auto& c : static_cast<const rings::ProductRing&>(ring).components()) {
        if (!generators_span(*c)) return false;
      }
      return true;
    default: return true;
  }
}

}  // namespace

LeadingCriteria central_leading_checks(const OrePoly& f) {
  LeadingCriteria c;
  if (f.degree() < 1) return c;
  const auto& ctx = f.context();
  const Ring& ring = *ctx->ring();
  const Value& a = f.lead();
  const auto n = static_cast<std::uint32_t>(f.degree());
  c.applicable = true;
  c.sigma_fixed = ring.equal(ctx->sigma()(a), a);
  c.twisted_commute = true;
  for (const Value& r : ring.generators()) {
    if (!ring.equal(ring.mul(r, a), ring.mul(a, ctx->sigma().apply_power(r, n)))) {
      c.twisted_commute = false;
      c.failing_generator = r;
      break;
    }
  }
  c.regular = ring.is_regular(a);
  return c;
}

CentralityReport is_central(const OrePoly& f) {
  const auto& ctx = f.context();
  const Ring& ring = *ctx->ring();
  CentralityReport rep;
  rep.degree = f.degree();
  rep.lead = f.is_zero() ? ring.zero() : f.lead();
  rep.generators_complete = generators_span(ring);
  rep.central = true;
  // The commutant of f is a subring, so x and the ring generators suffice.
  const OrePoly cx = ore::ore_commutator(f, OrePoly::x(ctx));
  if (!cx.is_zero()) {
    rep.central = false;
    rep.counterexample = ctx->var();
    rep.commutator = cx;
  } else {
    for (const Value& g : ring.generators()) {
      OrePoly c = ore::ore_commutator(f, OrePoly::constant(ctx, g));
      if (!c.is_zero()) {
        rep.central = false;
        rep.counterexample = ring.render(g);
        rep.commutator = std::move(c);
        break;
      }
    }
  }
  rep.criteria = central_leading_checks(f);
  return rep;
}

}  // namespace skewlab::centerlab
