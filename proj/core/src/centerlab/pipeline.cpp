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

#include <algorithm>
#include <numeric>

#include "skewlab/centerlab/centerlab.hpp"
#include "skewlab/error.hpp"

namespace skewlab::centerlab {

using rings::Ring;
using rings::Scalar;

namespace {

bool is_simple_catalog(const Ring& ring) {
  if (dynamic_cast<const rings::FieldRing*>(&ring) != nullptr) return true;
  if (const auto* m = dynamic_cast<const rings::MatrixRing*>(&ring)) {
    return dynamic_cast<const rings::FieldRing*>(m->base().get()) != nullptr;
  }
  return false;
}

bool is_semisimple_catalog(const Ring& ring) {
  if (const auto* p = dynamic_cast<const rings::ProductRing*>(&ring)) {
    return std::all_of(p->components().begin(), p->components().end(),
                       [](const RingPtr& c) { return is_simple_catalog(*c); });
  }
  return is_simple_catalog(ring);
}

std::string pow_name(const std::string& var, std::uint32_t n) {
  return n == 1 ? var : var + "^" + std::to_string(n);
}

void semisimple_path(const Endo& sigma, const SigmaDeriv& delta, const PipelineBounds& bounds, PipelineReport& rep) {
  const Ring& ring = *sigma.ring();
  rep.path = "semisimple";
  rep.order = twists::endo_order_on_center(sigma, bounds.order);
  if (!rep.order) {
    rep.verdict = "unknown";
    rep.note = "BoundExceeded: σ has no order ≤ " + std::to_string(bounds.order) + " on the center";
    return;
  }
  rep.verdict = "PI";
  const std::uint32_t n = *rep.order;

  // With δ = δ_{b,σ}, y = x − b satisfies y·r = σ(r)·y, so u·y^N is central
  // exactly when u·x^N is central in R[x;σ].
  std::optional<Value> b;
  if (delta.is_zero_map()) {
    b = ring.zero();
  } else {
    b = solve_inner_adjoint(delta);
  }
  if (!b) {
    rep.note = "δ is not inner; no certificate attempted";
    return;
  }
  const auto witness = twists::inner_auto_witness(twists::power(sigma, n), sigma, n);
  if (!witness) {
    rep.note = "no invertible witness for σ^" + std::to_string(n) + " found in the scan";
    return;
  }
  std::vector<std::pair<Value, std::uint32_t>> candidates;
  if (witness->sigma_fixed) candidates.emplace_back(witness->u, n);
  if (witness->norm_form) {
    candidates.emplace_back(*witness->norm_form, n);
    candidates.emplace_back(*witness->norm_form, n * n);
  }
  const auto ctx = ore::OreContext::make(sigma, delta);
  const OrePoly y = OrePoly::x(ctx) - OrePoly::constant(ctx, *b);
  for (const auto& [u, degree] : candidates) {
    if (degree > bounds.certificate_degree) continue;
    const OrePoly f = OrePoly::constant(ctx, u) * y.pow(degree);
    if (is_central(f).central) {
      rep.certificate = f.to_string();
      rep.certificate_verified = true;
      const bool shifted = !ring.is_zero(*b);
      rep.note = "u = " + ring.render(u) + (shifted ? ", b = " + ring.render(*b) : "") + ": u*" +
                 (shifted ? "(" + ctx->var() + " - b)" : ctx->var()) + (degree == 1 ? "" : "^" + std::to_string(degree)) +
                 " is central";
      return;
    }
  }
  rep.note = "witness u = " + ring.render(witness->u) + " does not give a central u*" + pow_name(ctx->var(), n);
}

std::uint32_t root_order(const Scalar& lambda, std::uint64_t p) {
  // Roots of unity in Q and Q(i) have order dividing 4; in F_p, dividing p − 1.
  const std::uint64_t limit = p == 0 ? 4 : p - 1;
  Scalar power = lambda;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (power.is_one()) return static_cast<std::uint32_t>(k);
    power *= lambda;
  }
  return 0;
}

void noetherian_path(const Endo& sigma, const PipelineBounds& bounds, PipelineReport& rep) {
  const auto& p = static_cast<const rings::PolyRing&>(*sigma.ring());
  rep.path = "noetherian";
  rep.chain = kernel_chain(sigma, bounds.kernel);
  if (!rep.chain->stabilized) {
    rep.verdict = "unknown";
    rep.note = "BoundExceeded: kernel chain did not stabilize within " + std::to_string(bounds.kernel) + " steps";
    return;
  }
  const std::size_t n = rep.chain->n;
  const auto& killed = rep.chain->kernels[n];
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (std::find(killed.begin(), killed.end(), i) == killed.end()) rep.surviving.push_back(i);
  }
  if (n > 0) rep.nilpotency_exponent = static_cast<std::uint32_t>(n + 1);

  // σ̄ permutes the surviving variables up to scalars; find the cycle lengths
  // and the scalar accumulated around each cycle.
  std::uint32_t order = 1;
  std::vector<bool> done(p.variables().size(), false);
  for (std::size_t start : rep.surviving) {
    if (done[start]) continue;
    std::uint32_t len = 0;
    Value v = p.variable(start);
    done[start] = true;
    while (true) {
      v = sigma(v);
      ++len;
      const auto& ex = v.as<rings::Poly>().terms.begin()->first;
      const auto idx = static_cast<std::size_t>(std::find(ex.begin(), ex.end(), 1U) - ex.begin());
      done[idx] = true;
      if (idx == start) break;
    }
    const Scalar lambda = v.as<rings::Poly>().terms.begin()->second;
    const std::uint32_t k = root_order(lambda, p.base_field().characteristic());
    if (k == 0) {
      rep.verdict = "not-PI";
      rep.note = "σ̄ multiplies " + p.variables()[start] + " by " + lambda.to_string() + " around a cycle of length " +
                 std::to_string(len) + ", so it has infinite order";
      return;
    }
    order = std::lcm(order, len * k);
  }
  rep.order = order;
  rep.verdict = "PI";
  rep.note = "R' = R/ker σ^" + std::to_string(n) + " keeps " + std::to_string(rep.surviving.size()) +
             " variables; σ̄ has order " + std::to_string(order);
  if (rep.nilpotency_exponent) {
    rep.note += "; [x1,x2]^" + std::to_string(*rep.nilpotency_exponent) + " = 0 expected";
  }
}

}  // namespace

PipelineReport pi_decide_pipeline(const Endo& sigma, const SigmaDeriv& delta, const PipelineBounds& bounds) {
  const Ring& ring = *sigma.ring();
  PipelineReport rep;
  if (is_semisimple_catalog(ring)) {
    semisimple_path(sigma, delta, bounds, rep);
    return rep;
  }
  if (const auto* p = dynamic_cast<const rings::PolyRing*>(&ring)) {
    if (p->unbounded_family()) {
      throw Error(Errc::OutOfCatalog, ring.descriptor() +
                                          " declares an unbounded variable family; see the pilab replay "
                                          "ex-4.9-infinite-shift for a falsified identity");
    }
    const bool truncated = std::any_of(p->truncation().begin(), p->truncation().end(), [](std::uint32_t t) { return t != 0; });
    const bool variable_map =
        sigma.kind() == twists::EndoKind::VariableMap || sigma.kind() == twists::EndoKind::Identity;
    if (!truncated && variable_map && delta.is_zero_map()) {
      noetherian_path(sigma, bounds, rep);
      return rep;
    }
  }
  throw Error(Errc::OutOfCatalog, ring.descriptor() + " with " + sigma.describe() + ", " + delta.describe() +
                                      " is outside the decidable catalog");
}

}  // namespace skewlab::centerlab
