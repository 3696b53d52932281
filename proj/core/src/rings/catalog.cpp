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

#include "skewlab/error.hpp"
#include "skewlab/rings/catalog.hpp"

namespace skewlab::rings {

RingPtr make_field(ScalarField field) { return std::make_shared<FieldRing>(field); }

RingPtr make_polynomial(ScalarField field, std::vector<std::string> vars, std::vector<std::uint32_t> truncation,
                        bool unbounded_family) {
  return std::make_shared<PolyRing>(field, std::move(vars), std::move(truncation), unbounded_family);
}

RingPtr make_mixed(Constraint c) { return std::make_shared<MixedRing>(c); }

RingPtr make_matrix(RingPtr base, std::size_t n) { return std::make_shared<MatrixRing>(std::move(base), n); }

RingPtr make_constrained_matrix(std::size_t k, const std::vector<Constraint>& constraints) {
  if (k == 0) throw Error(Errc::UnsupportedKind, "matrix size must be at least 1");
  if (constraints.size() != k * k) {
    throw Error(Errc::UnsupportedKind, "expected " + std::to_string(k * k) + " entry constraints");
  }
  auto at = [&](std::size_t i, std::size_t j) { return constraints[i * k + j]; };
  auto where = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (!at(i, i).has_one()) {
      throw Error(Errc::ClosureViolation, "diagonal entry " + where(i, i) + " = " + at(i, i).name() +
                                              " does not contain 1");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t j = 0; j < k; ++j) {
        const Constraint prod = at(i, m) * at(m, j);
        if (!at(i, j).includes(prod)) {
          throw Error(Errc::ClosureViolation, where(i, m) + "*" + where(m, j) + ": " + at(i, m).name() + " * " +
                                                  at(m, j).name() + " is not contained in " + at(i, j).name() +
                                                  " at " + where(i, j));
        }
      }
    }
  }
  return std::make_shared<ConstrainedMatrixRing>(k, constraints);
}

RingPtr make_product(std::vector<RingPtr> components, std::optional<std::vector<Value>> idempotents) {
  return std::make_shared<ProductRing>(std::move(components), std::move(idempotents));
}

RingPtr localize(const RingPtr& ring, const Value& u) {
  if (!ring->contains(u)) throw Error(Errc::NotCentral, "u is not an element of " + ring->descriptor());
  for (const Value& g : ring->generators()) {
    if (!ring->equal(ring->mul(u, g), ring->mul(g, u))) {
      throw Error(Errc::NotCentral, ring->render(u) + " does not commute with " + ring->render(g));
    }
  }
  if (!ring->is_regular(u)) throw Error(Errc::NotRegular, ring->render(u) + " is a zero divisor");
  return std::make_shared<LocalizationRing>(ring, u);
}

namespace {

RingPtr build_part(const RingSpec& spec, std::size_t index) {
  if (index < spec.prebuilt.size()) return spec.prebuilt[index];
  if (index < spec.parts.size()) return ring_make(spec.parts[index]);
  throw Error(Errc::UnsupportedKind, std::string(ring_kind_name(spec.kind)) + " ring is missing a component");
}

std::size_t part_count(const RingSpec& spec) { return std::max(spec.prebuilt.size(), spec.parts.size()); }

}  // namespace

RingPtr ring_make(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Field: return make_field(spec.field);
    case RingKind::Polynomial:
      return make_polynomial(spec.field, spec.variables, spec.truncation, spec.unbounded_family);
    case RingKind::Mixed: return make_mixed(Constraint::parse(spec.constraint));
    case RingKind::Matrix: {
      RingPtr base = part_count(spec) == 0 ? make_field(spec.field) : build_part(spec, 0);
      return make_matrix(base, spec.size);
    }
    case RingKind::ConstrainedMatrix: {
      std::vector<Constraint> cs;
      for (const std::string& name : spec.constraints) cs.push_back(Constraint::parse(name));
      return make_constrained_matrix(spec.size, cs);
    }
    case RingKind::Product: {
      std::vector<RingPtr> comps;
      for (std::size_t i = 0; i < part_count(spec); ++i) comps.push_back(build_part(spec, i));
      if (!spec.idempotents) return make_product(std::move(comps));
      RingPtr plain = make_product(comps);
      std::vector<Value> es;
      for (const std::string& text : *spec.idempotents) es.push_back(plain->parse(text));
      return make_product(std::move(comps), std::move(es));
    }
    case RingKind::Localization: {
      RingPtr base = build_part(spec, 0);
      return localize(base, base->parse(spec.element));
    }
  }
  throw Error(Errc::UnsupportedKind, "unknown ring kind");
}

bool membership(const Value& a, const Ring& ambient, const Ring& sub) {
  const RingPtr sub_ambient = sub.ambient();
  if (!same_ring(sub, ambient) && (!sub_ambient || !same_ring(*sub_ambient, ambient))) {
    throw Error(Errc::NotASubringOf, sub.descriptor() + " is not a subring of " + ambient.descriptor());
  }
  return ambient.contains(a) && sub.contains(a);
}

std::vector<Value> center_basis(const Ring& ring) { return ring.center().elements; }

}  // namespace skewlab::rings
