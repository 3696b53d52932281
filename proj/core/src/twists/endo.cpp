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

#include "skewlab/twists/endo.hpp"

#include "skewlab/error.hpp"
#include "skewlab/twists/analysis.hpp"

namespace skewlab::twists {

using rings::LocalizationRing;
using rings::PolyRing;
using rings::ProductRing;
using rings::Ring;

std::string_view endo_kind_name(EndoKind kind) {
  switch (kind) {
    case EndoKind::Identity: return "identity";
    case EndoKind::Inner: return "inner";
    case EndoKind::VariableMap: return "variable-map";
    case EndoKind::Additive: return "additive";
    case EndoKind::ComponentMap: return "component-map";
    case EndoKind::Conjugation: return "conjugation";
    case EndoKind::Power: return "power";
    case EndoKind::Composite: return "composite";
    case EndoKind::Localized: return "localized";
    case EndoKind::Restricted: return "restricted";
  }
  return "?";
}

std::string_view deriv_kind_name(DerivKind kind) {
  switch (kind) {
    case DerivKind::Zero: return "zero";
    case DerivKind::Inner: return "inner";
    case DerivKind::Partial: return "partial";
    case DerivKind::Componentwise: return "componentwise";
    case DerivKind::Restricted: return "restricted";
  }
  return "?";
}

namespace {

const PolyRing& poly_of(const Endo& e) { return static_cast<const PolyRing&>(*e.ring()); }

const PolyRing& require_poly(const RingPtr& ring, std::string_view what) {
  const auto* p = dynamic_cast<const PolyRing*>(ring.get());
  if (!p) throw Error(Errc::UnsupportedKind, std::string(what) + " needs a polynomial ring, got " + ring->descriptor());
  return *p;
}

const ProductRing& require_product(const RingPtr& ring, std::string_view what) {
  const auto* p = dynamic_cast<const ProductRing*>(ring.get());
  if (!p) throw Error(Errc::UnsupportedKind, std::string(what) + " needs a product ring, got " + ring->descriptor());
  return *p;
}

Value substitute(const PolyRing& ring, const Value& r, const std::vector<Value>& images) {
  Value out = ring.zero();
  for (const auto& [e, c] : r.as<rings::Poly>().terms) {
    Value term = ring.from_scalar(c);
    for (std::size_t i = 0; i < e.size() && !ring.is_zero(term); ++i) {
      if (e[i] > 0) term = ring.mul(term, ring.pow(images[i], e[i]));
    }
    out = ring.add(out, term);
  }
  return out;
}

Value additive_apply(const PolyRing& ring, const Value& r, const std::vector<Value>& images) {
  Value out = ring.zero();
  for (const auto& [e, c] : r.as<rings::Poly>().terms) {
    std::uint32_t degree = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      degree += e[i];
      if (e[i] > 0) var = i;
    }
    out = ring.add(out, degree == 1 ? ring.scale(c, images[var]) : ring.monomial(e, c));
  }
  return out;
}

// Block element placed in its slots of the parent product.
Value lift(const ProductRing& parent, const std::vector<std::size_t>& indices, const Value& b) {
  Value out = parent.zero();
  auto& parts = out.as<rings::Tuple>().parts;
  for (std::size_t k = 0; k < indices.size(); ++k) parts[indices[k]] = b.as<rings::Tuple>().parts[k];
  return out;
}

Value project(const std::vector<std::size_t>& indices, const Value& a) {
  rings::Tuple t;
  for (std::size_t i : indices) t.parts.push_back(a.as<rings::Tuple>().parts[i]);
  return t;
}

Endo finish(EndoRep rep) {
  Endo e(std::make_shared<const EndoRep>(std::move(rep)));
  const Ring& ring = *e.ring();
  std::vector<Value> images;
  for (const Value& g : ring.generators()) {
    Value img = e.apply(g);
    if (!ring.contains(img)) {
      throw Error(Errc::NotStable, "σ(" + ring.render(g) + ") = " + ring.render(img) + " is not in " +
                                       ring.descriptor());
    }
    images.push_back(std::move(img));
  }
  const_cast<EndoRep&>(e.rep()).generator_images = std::move(images);
  return e;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// Endo

const RingPtr& Endo::ring() const { return rep_->ring; }
EndoKind Endo::kind() const { return rep_->kind; }
const std::vector<Value>& Endo::generator_images() const { return rep_->generator_images; }

Value Endo::apply(const Value& r) const {
  const EndoRep& e = *rep_;
  switch (e.kind) {
    case EndoKind::Identity: return r;
    case EndoKind::Inner: {
      const Ring& a = *e.ambient;
      return e.ring->normalize(a.mul(a.mul(e.u_inv, r), e.u));
    }
    case EndoKind::VariableMap: return substitute(poly_of(*this), r, e.images);
    case EndoKind::Additive: return additive_apply(poly_of(*this), r, e.images);
    case EndoKind::ComponentMap: {
      rings::Tuple t;
      const auto& parts = r.as<rings::Tuple>().parts;
      for (std::size_t j = 0; j < e.source.size(); ++j) t.parts.push_back(e.maps[j].apply(parts[e.source[j]]));
      return t;
    }
    case EndoKind::Conjugation: return e.ring->normalize(rings::conjugate_scalars(r));
    case EndoKind::Power: return e.parts[0].apply_power(r, e.exponent);
    case EndoKind::Composite: return e.parts[0].apply(e.parts[1].apply(r));
    case EndoKind::Localized: {
      const auto& f = r.as<rings::Frac>();
      return e.ring->normalize(rings::Frac{e.parts[0].apply(*f.num), f.exp});
    }
    case EndoKind::Restricted: {
      const auto& parent = static_cast<const ProductRing&>(*e.parts[0].ring());
      return project(e.source, e.parts[0].apply(lift(parent, e.source, r)));
    }
  }
  throw Error(Errc::Unsupported, "unknown endomorphism kind");
}

Value Endo::apply_power(const Value& r, std::uint32_t k) const {
  Value out = r;
  for (std::uint32_t i = 0; i < k; ++i) out = apply(out);
  return out;
}

std::string Endo::describe() const {
  const EndoRep& e = *rep_;
  switch (e.kind) {
    case EndoKind::Identity: return "identity";
    case EndoKind::Inner: return "inner(u=" + e.ambient->render(e.u) + ")";
    case EndoKind::VariableMap:
    case EndoKind::Additive: {
      const PolyRing& p = poly_of(*this);
      std::string out = std::string(endo_kind_name(e.kind)) + "(";
      for (std::size_t i = 0; i < e.images.size(); ++i) {
        out += (i ? ", " : "") + p.variables()[i] + "->" + p.render(e.images[i]);
      }
      return out + ")";
    }
    case EndoKind::ComponentMap: {
      std::string out = "component-map(source=" + join_indices(e.source);
      bool all_identity = true;
      for (const Endo& m : e.maps) all_identity = all_identity && m.kind() == EndoKind::Identity;
      if (!all_identity) {
        out += ", maps=[";
        for (std::size_t j = 0; j < e.maps.size(); ++j) out += (j ? ", " : "") + e.maps[j].describe();
        out += "]";
      }
      return out + ")";
    }
    case EndoKind::Conjugation: return "conjugation";
    case EndoKind::Power: return "power(" + e.parts[0].describe() + ", " + std::to_string(e.exponent) + ")";
    case EndoKind::Composite: return "compose(" + e.parts[0].describe() + ", " + e.parts[1].describe() + ")";
    case EndoKind::Localized: return "localized(" + e.parts[0].describe() + ")";
    case EndoKind::Restricted: return "restricted(" + e.parts[0].describe() + ", " + join_indices(e.source) + ")";
  }
  return "?";
}

Endo identity(RingPtr ring) { return finish(EndoRep{.kind = EndoKind::Identity, .ring = std::move(ring)}); }

Endo inner(RingPtr ring, const Value& u, RingPtr ambient) {
  if (!ambient) ambient = ring->ambient() ? ring->ambient() : ring;
  if (!ambient->contains(ring->one())) {
    throw Error(Errc::UnsupportedKind, ambient->descriptor() + " does not share the representation of " +
                                           ring->descriptor());
  }
  if (!ambient->contains(u)) throw Error(Errc::WitnessNotInvertible, "u is not an element of " + ambient->descriptor());
  auto inv = ambient->inverse(u);
  if (!inv) {
    throw Error(Errc::WitnessNotInvertible, ambient->render(u) + " is not invertible in " + ambient->descriptor());
  }
  EndoRep rep{.kind = EndoKind::Inner, .ring = std::move(ring), .ambient = std::move(ambient), .u = u, .u_inv = *inv};
  return finish(std::move(rep));
}

Endo variable_map(RingPtr ring, std::vector<Value> images) {
  const PolyRing& p = require_poly(ring, "variable-map");
  if (images.size() != p.variables().size()) {
    throw Error(Errc::UnsupportedKind, "variable-map needs one image per variable");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!p.contains(images[i])) throw Error(Errc::NotStable, "image of " + p.variables()[i] + " is not in the ring");
    const std::uint32_t bound = p.truncation()[i];
    if (bound != 0 && !p.is_zero(p.pow(images[i], bound))) {
      throw Error(Errc::NotStable, "σ(" + p.variables()[i] + ")^" + std::to_string(bound) + " = " +
                                       p.render(p.pow(images[i], bound)) + " breaks the relation " +
                                       p.variables()[i] + "^" + std::to_string(bound) + " = 0");
    }
  }
  return finish(EndoRep{.kind = EndoKind::VariableMap, .ring = std::move(ring), .images = std::move(images)});
}

Endo shift(RingPtr ring) {
  const PolyRing& p = require_poly(ring, "shift");
  std::vector<Value> images{p.zero()};
  for (std::size_t i = 1; i < p.variables().size(); ++i) images.push_back(p.variable(i - 1));
  return variable_map(std::move(ring), std::move(images));
}

Endo additive_map(RingPtr ring, std::vector<Value> images) {
  const PolyRing& p = require_poly(ring, "additive map");
  if (images.size() != p.variables().size()) throw Error(Errc::UnsupportedKind, "additive map needs one image per variable");
  return finish(EndoRep{.kind = EndoKind::Additive, .ring = std::move(ring), .images = std::move(images)});
}

Endo component_map(RingPtr product, std::vector<std::size_t> source, std::vector<Endo> maps) {
  const ProductRing& p = require_product(product, "component-map");
  const std::size_t s = p.arity();
  if (source.size() != s) throw Error(Errc::UnsupportedKind, "component-map needs " + std::to_string(s) + " entries");
  for (std::size_t j = 0; j < s; ++j) {
    if (source[j] >= s) throw Error(Errc::UnsupportedKind, "component index out of range");
    if (!rings::same_ring(*p.components()[j], *p.components()[source[j]])) {
      throw Error(Errc::NotStable, "component " + std::to_string(source[j] + 1) + " cannot be carried to component " +
                                       std::to_string(j + 1) + " (different rings)");
    }
  }
  if (maps.empty()) {
    for (std::size_t j = 0; j < s; ++j) maps.push_back(identity(p.components()[source[j]]));
  }
  if (maps.size() != s) throw Error(Errc::UnsupportedKind, "component-map needs one map per component");
  for (std::size_t j = 0; j < s; ++j) {
    if (!rings::same_ring(*maps[j].ring(), *p.components()[source[j]])) {
      throw Error(Errc::RingMismatch, "map " + std::to_string(j + 1) + " acts on the wrong component");
    }
  }
  return finish(EndoRep{.kind = EndoKind::ComponentMap, .ring = std::move(product), .source = std::move(source),
                        .maps = std::move(maps)});
}

Endo component_permutation(RingPtr product, const std::vector<std::size_t>& perm, std::vector<Endo> maps) {
  const std::size_t s = perm.size();
  std::vector<std::size_t> source(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    if (perm[i] >= s || source[perm[i]] != s) {
      throw Error(Errc::NotStable, "component list " + join_indices(perm) + " is not a permutation");
    }
    source[perm[i]] = i;
  }
  // maps are given per source component i; reorder to target order.
  std::vector<Endo> ordered;
  if (!maps.empty()) {
    if (maps.size() != s) throw Error(Errc::UnsupportedKind, "component-map needs one map per component");
    for (std::size_t j = 0; j < s; ++j) ordered.push_back(maps[source[j]]);
  }
  return component_map(std::move(product), std::move(source), std::move(ordered));
}

Endo conjugation(RingPtr ring) {
  if (ring->base_field().kind() != rings::ScalarField::Kind::Gaussian) {
    throw Error(Errc::UnsupportedKind, "conjugation needs scalars in Q(i), got " + ring->descriptor());
  }
  return finish(EndoRep{.kind = EndoKind::Conjugation, .ring = std::move(ring)});
}

Endo power(const Endo& sigma, std::uint32_t n) {
  if (n == 1) return sigma;
  if (n == 0) return identity(sigma.ring());
  return finish(EndoRep{.kind = EndoKind::Power, .ring = sigma.ring(), .parts = {sigma}, .exponent = n});
}

Endo compose(const Endo& f, const Endo& g) {
  if (!rings::same_ring(*f.ring(), *g.ring())) throw Error(Errc::RingMismatch, "composition across rings");
  return finish(EndoRep{.kind = EndoKind::Composite, .ring = f.ring(), .parts = {f, g}});
}

Endo localized(RingPtr localization, const Endo& sigma) {
  const auto* loc = dynamic_cast<const LocalizationRing*>(localization.get());
  if (!loc) throw Error(Errc::UnsupportedKind, localization->descriptor() + " is not a localization");
  if (!rings::same_ring(*loc->base(), *sigma.ring())) {
    throw Error(Errc::RingMismatch, "σ acts on " + sigma.ring()->descriptor() + ", not on " + loc->base()->descriptor());
  }
  const Ring& base = *loc->base();
  if (!base.equal(sigma.apply(loc->element()), loc->element())) {
    throw Error(Errc::NotStable, "σ does not fix the inverted element " + base.render(loc->element()));
  }
  return finish(EndoRep{.kind = EndoKind::Localized, .ring = std::move(localization), .parts = {sigma}});
}

Endo restricted(const Endo& sigma, RingPtr block, std::vector<std::size_t> indices) {
  require_product(sigma.ring(), "restriction");
  require_product(block, "restriction");
  return finish(EndoRep{.kind = EndoKind::Restricted, .ring = std::move(block), .source = std::move(indices),
                        .parts = {sigma}});
}

namespace {

RingPtr component_ring(const RingPtr& product, std::size_t i) {
  return require_product(product, "component-map").components().at(i);
}

}  // namespace

Endo endo_make(RingPtr ring, const EndoSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "identity") return identity(std::move(ring));
  if (k == "inner") {
    RingPtr ambient = spec.ambient ? *spec.ambient : (ring->ambient() ? ring->ambient() : ring);
    return inner(ring, ambient->parse(spec.u), ambient);
  }
  if (k == "variable-map" || k == "additive") {
    std::vector<Value> images;
    for (const std::string& text : spec.images) images.push_back(ring->parse(text));
    return k == "additive" ? additive_map(std::move(ring), std::move(images))
                           : variable_map(std::move(ring), std::move(images));
  }
  if (k == "shift") return shift(std::move(ring));
  if (k == "conjugation") return conjugation(std::move(ring));
  if (k == "component-map") {
    const ProductRing& p = require_product(ring, "component-map");
    std::vector<Endo> maps;
    const bool by_perm = !spec.perm.empty();
    for (std::size_t i = 0; i < spec.maps.size(); ++i) {
      // Per-component maps act on the source component.
      const std::size_t src = by_perm ? i : spec.source.at(i);
      maps.push_back(endo_make(component_ring(ring, src), spec.maps[i]));
    }
    if (by_perm) return component_permutation(std::move(ring), spec.perm, std::move(maps));
    if (spec.source.size() != p.arity()) throw Error(Errc::UnsupportedKind, "component-map needs perm or source");
    return component_map(std::move(ring), spec.source, std::move(maps));
  }
  if (k == "power") {
    if (spec.maps.size() != 1) throw Error(Errc::UnsupportedKind, "power needs exactly one base map");
    return power(endo_make(ring, spec.maps[0]), spec.exponent);
  }
  if (k == "localized") {
    const auto* loc = dynamic_cast<const LocalizationRing*>(ring.get());
    if (!loc || spec.maps.size() != 1) throw Error(Errc::UnsupportedKind, "localized needs a localization and one base map");
    return localized(ring, endo_make(loc->base(), spec.maps[0]));
  }
  throw Error(Errc::UnsupportedKind, "unknown endomorphism kind '" + k + "'");
}

// ---------------------------------------------------------------------------
// SigmaDeriv

const Endo& SigmaDeriv::sigma() const { return rep_->sigma; }
const RingPtr& SigmaDeriv::ring() const { return rep_->sigma.ring(); }
DerivKind SigmaDeriv::kind() const { return rep_->kind; }

Value SigmaDeriv::apply(const Value& r) const {
  const DerivRep& d = *rep_;
  const Ring& ring = *d.sigma.ring();
  switch (d.kind) {
    case DerivKind::Zero: return ring.zero();
    case DerivKind::Inner: return ring.sub(ring.mul(d.b, r), ring.mul(d.sigma.apply(r), d.b));
    case DerivKind::Partial: {
      const auto& p = static_cast<const PolyRing&>(ring);
      rings::Poly out;
      for (const auto& [e, c] : r.as<rings::Poly>().terms) {
        if (e[d.variable] == 0) continue;
        rings::Exponents f = e;
        --f[d.variable];
        out = p.add(out, p.monomial(f, c * p.base_field().from_int(static_cast<long>(e[d.variable])))).as<rings::Poly>();
      }
      return out;
    }
    case DerivKind::Componentwise: {
      rings::Tuple t;
      const auto& parts = r.as<rings::Tuple>().parts;
      for (std::size_t i = 0; i < parts.size(); ++i) t.parts.push_back(d.parts[i].apply(parts[i]));
      return t;
    }
    case DerivKind::Restricted: {
      const SigmaDeriv& parent = d.parts[0];
      const auto& parent_ring = static_cast<const ProductRing&>(*parent.ring());
      return project(d.indices, parent.apply(lift(parent_ring, d.indices, r)));
    }
  }
  throw Error(Errc::Unsupported, "unknown derivation kind");
}

std::string SigmaDeriv::describe() const {
  const DerivRep& d = *rep_;
  switch (d.kind) {
    case DerivKind::Zero: return "zero";
    case DerivKind::Inner: return "inner(b=" + ring()->render(d.b) + ")";
    case DerivKind::Partial:
      return "partial(" + static_cast<const PolyRing&>(*ring()).variables()[d.variable] + ")";
    case DerivKind::Componentwise: {
      std::string out = "componentwise(";
      for (std::size_t i = 0; i < d.parts.size(); ++i) out += (i ? ", " : "") + d.parts[i].describe();
      return out + ")";
    }
    case DerivKind::Restricted: return "restricted(" + d.parts[0].describe() + ", " + join_indices(d.indices) + ")";
  }
  return "?";
}

namespace {

SigmaDeriv checked(DerivRep rep) {
  SigmaDeriv d(std::make_shared<const DerivRep>(std::move(rep)));
  if (auto failure = check_leibniz(d, kDefaultDerivSamples, 0)) {
    throw Error(Errc::LeibnizViolation, failure->law + " fails at " + failure->detail);
  }
  return d;
}

}  // namespace

SigmaDeriv zero_derivation(const Endo& sigma) {
  return SigmaDeriv(std::make_shared<const DerivRep>(DerivRep{.kind = DerivKind::Zero, .sigma = sigma}));
}

SigmaDeriv inner_derivation(const Endo& sigma, const Value& b) {
  const Ring& ring = *sigma.ring();
  if (!ring.contains(b)) throw Error(Errc::IllDefined, "b = " + ring.render(b) + " is not in " + ring.descriptor());
  // Inner σ-derivations satisfy the Leibniz law identically; no sampling needed.
  return SigmaDeriv(std::make_shared<const DerivRep>(DerivRep{.kind = DerivKind::Inner, .sigma = sigma, .b = b}));
}

SigmaDeriv partial_derivative(const Endo& sigma, std::size_t var) {
  const PolyRing& p = require_poly(sigma.ring(), "formal derivative");
  if (var >= p.variables().size()) throw Error(Errc::IllDefined, "no such variable");
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (!p.equal(sigma.generator_images()[i], p.generators()[i])) {
      throw Error(Errc::IllDefined, "a formal derivative needs σ = id; σ moves " + p.render(p.generators()[i]));
    }
  }
  const std::uint32_t bound = p.truncation()[var];
  if (bound != 0 && !p.base_field().from_int(static_cast<long>(bound)).is_zero()) {
    throw Error(Errc::IllDefined, "d/d" + p.variables()[var] + " does not preserve (" + p.variables()[var] + "^" +
                                      std::to_string(bound) + "): its derivative " + std::to_string(bound) + "*" +
                                      p.variables()[var] + "^" + std::to_string(bound - 1) + " is nonzero in " +
                                      p.descriptor());
  }
  return checked(DerivRep{.kind = DerivKind::Partial, .sigma = sigma, .variable = var});
}

SigmaDeriv componentwise(const Endo& sigma, std::vector<SigmaDeriv> parts) {
  const ProductRing& p = require_product(sigma.ring(), "componentwise derivation");
  if (parts.size() != p.arity()) throw Error(Errc::UnsupportedKind, "one derivation per component required");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!rings::same_ring(*parts[i].ring(), *p.components()[i])) {
      throw Error(Errc::RingMismatch, "derivation " + std::to_string(i + 1) + " acts on the wrong component");
    }
  }
  return checked(DerivRep{.kind = DerivKind::Componentwise, .sigma = sigma, .parts = std::move(parts)});
}

SigmaDeriv restricted(const SigmaDeriv& delta, const Endo& block_sigma, std::vector<std::size_t> indices) {
  return SigmaDeriv(std::make_shared<const DerivRep>(DerivRep{
      .kind = DerivKind::Restricted, .sigma = block_sigma, .parts = {delta}, .indices = std::move(indices)}));
}

SigmaDeriv deriv_make(const Endo& sigma, const DerivSpec& spec) {
  const RingPtr& ring = sigma.ring();
  if (spec.kind == "zero" || spec.kind.empty()) return zero_derivation(sigma);
  if (spec.kind == "inner") return inner_derivation(sigma, ring->parse(spec.b));
  if (spec.kind == "partial") {
    const PolyRing& p = require_poly(ring, "formal derivative");
    auto var = p.variable_index(spec.variable);
    if (!var) throw Error(Errc::IllDefined, "unknown variable '" + spec.variable + "'");
    return partial_derivative(sigma, *var);
  }
  if (spec.kind == "componentwise") {
    const ProductRing& p = require_product(ring, "componentwise derivation");
    if (sigma.kind() != EndoKind::ComponentMap && sigma.kind() != EndoKind::Identity) {
      throw Error(Errc::UnsupportedKind, "componentwise derivations need a component map σ");
    }
    std::vector<SigmaDeriv> parts;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      Endo part_sigma = identity(p.components().at(i));
      if (sigma.kind() == EndoKind::ComponentMap) {
        if (sigma.rep().source[i] != i) throw Error(Errc::UnsupportedKind, "componentwise δ needs σ to fix components");
        part_sigma = sigma.rep().maps[i];
      }
      parts.push_back(deriv_make(part_sigma, spec.parts[i]));
    }
    return componentwise(sigma, std::move(parts));
  }
  throw Error(Errc::UnsupportedKind, "unknown derivation kind '" + spec.kind + "'");
}

}  // namespace skewlab::twists
