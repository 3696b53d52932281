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
#include <map>
#include <numeric>

#include "skewlab/centerlab/centerlab.hpp"
#include "skewlab/error.hpp"
#include "skewlab/rings/solve.hpp"

namespace skewlab::centerlab {

using rings::ProductRing;
using rings::Ring;
using rings::Scalar;
using rings::ScalarMatrix;
using rings::ScalarVector;
using rings::Tuple;

namespace {

std::vector<std::size_t> support(const ProductRing& p, const Value& v) {
  std::vector<std::size_t> out;
  const auto& parts = v.as<Tuple>().parts;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!p.components()[j]->is_zero(parts[j])) out.push_back(j);
  }
  return out;
}

bool supported_in(const ProductRing& p, const Value& v, std::initializer_list<std::size_t> allowed) {
  for (std::size_t j : support(p, v)) {
    if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) return false;
  }
  return true;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) out += (out.empty() ? "" : ", ") + std::to_string(i + 1);
  return "{" + out + "}";
}

}  // namespace

OrbitDecomposition orbit_decompose(const RingPtr& ring, const Endo& sigma, const SigmaDeriv& delta) {
  const auto* p = dynamic_cast<const ProductRing*>(ring.get());
  if (p == nullptr) throw Error(Errc::NotAProduct, ring->descriptor() + " is not a finite product");
  const std::size_t s = p->arity();
  for (std::size_t i = 0; i < s; ++i) {
    if (p->idempotents().size() != s || !p->equal(p->idempotents()[i], p->inject(i, p->components()[i]->one()))) {
      throw Error(Errc::Unsupported, "orbit decomposition needs the standard component idempotents");
    }
  }
  OrbitDecomposition dec;
  dec.rho.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Value img = sigma(p->idempotents()[i]);
    const auto sup = support(*p, img);
    if (sup.size() != 1) {
      throw Error(Errc::RhoIllDefined, "σ(e" + std::to_string(i + 1) + ") = " + p->render(img) + " is supported on " +
                                           index_list(sup));
    }
    dec.rho[i] = sup[0];
  }
  std::vector<std::size_t> sorted = dec.rho;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::RhoIllDefined, "component map " + index_list(dec.rho) + " is not a bijection");
  }

  dec.sigma_flag = true;
  dec.delta_flag = true;
  for (std::size_t i = 0; i < s; ++i) {
    for (const Value& g : p->components()[i]->generators()) {
      const Value r = p->inject(i, g);
      dec.sigma_flag = dec.sigma_flag && supported_in(*p, sigma(r), {dec.rho[i]});
      dec.delta_flag = dec.delta_flag && supported_in(*p, delta(r), {i, dec.rho[i]});
    }
  }

  std::vector<bool> seen(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t k = i; !seen[k]; k = dec.rho[k]) {
      seen[k] = true;
      orbit.push_back(k);
    }
    std::sort(orbit.begin(), orbit.end());
    dec.orbits.push_back(orbit);
  }
  if (!dec.sigma_flag || !dec.delta_flag) return dec;
  for (const auto& orbit : dec.orbits) {
    std::vector<RingPtr> comps;
    for (std::size_t i : orbit) comps.push_back(p->components()[i]);
    RingPtr block = rings::make_product(std::move(comps));
    Endo bs = twists::restricted(sigma, block, orbit);
    dec.block_delta.push_back(twists::restricted(delta, bs, orbit));
    dec.block_sigma.push_back(std::move(bs));
    dec.blocks.push_back(std::move(block));
  }
  return dec;
}

namespace {

// Multiplication-by-y matrix on span(basis), in basis coordinates.
ScalarMatrix multiplication_on(const Ring& ring, const ScalarMatrix& span, const std::vector<Value>& basis,
                               const Value& y) {
  ScalarMatrix out(basis.size(), basis.size(), ring.coord_zero());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto c = rings::solve(span, ring.coords(ring.mul(y, basis[j])));
    if (!c) throw Error(Errc::Unsupported, "fixed algebra is not closed under multiplication");
    for (std::size_t i = 0; i < basis.size(); ++i) out.at(i, j) = (*c)[i];
  }
  return out;
}

std::vector<Value> span_basis(const Ring& ring, const std::vector<Value>& values) {
  std::vector<Value> out;
  std::size_t current = 0;
  for (const Value& v : values) {
    std::vector<Value> trial = out;
    trial.push_back(v);
    const ScalarMatrix m = rings::stacked_columns(ring, trial.size(), [&](std::size_t k) { return std::vector<Value>{trial[k]}; });
    const std::size_t r = rings::rank(m);
    if (r > current) {
      out = std::move(trial);
      current = r;
    }
  }
  return out;
}

// A reduced finite-dimensional commutative algebra over a perfect field is a
// product of fields; reducedness is tested by the trace form (char 0) or the
// Frobenius map (char p).
bool is_reduced(const Ring& ring, const std::vector<Value>& basis) {
  const ScalarMatrix span = rings::stacked_columns(ring, basis.size(), [&](std::size_t k) { return std::vector<Value>{basis[k]}; });
  const std::uint64_t p = ring.base_field().characteristic();
  const std::size_t d = basis.size();
  if (p == 0) {
    std::vector<ScalarMatrix> mult;
    for (const Value& b : basis) mult.push_back(multiplication_on(ring, span, basis, b));
    ScalarMatrix gram(d, d, ring.coord_zero());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const ScalarMatrix m = multiplication_on(ring, span, basis, ring.mul(basis[i], basis[j]));
        Scalar tr = ring.coord_zero();
        for (std::size_t k = 0; k < d; ++k) tr += m.at(k, k);
        gram.at(i, j) = tr;
      }
    }
    return rings::rank(gram) == d;
  }
  const ScalarMatrix frob = rings::stacked_columns(ring, d, [&](std::size_t k) {
    return std::vector<Value>{ring.pow(basis[k], static_cast<std::uint32_t>(p))};
  });
  return rings::rank(frob) == d;
}

bool in_span(const Ring& ring, const ScalarMatrix& span, const Value& v) {
  return rings::solve(span, ring.coords(v)).has_value();
}

}  // namespace

UdimReport udim_over_fixed(const Endo& sigma, const SigmaDeriv& delta) {
  const Ring& ring = *sigma.ring();
  const twists::FixedSubalgebra fixed = twists::fixed_subalgebra(sigma, delta);
  if (fixed.basis.empty()) throw Error(Errc::Unsupported, "fixed subalgebra is zero");
  if (fixed.center_basis.size() > kUdimMaxDimension) {
    throw Error(Errc::Unsupported, "center has dimension " + std::to_string(fixed.center_basis.size()) + " > " +
                                       std::to_string(kUdimMaxDimension));
  }
  UdimReport rep;
  rep.fixed_basis = fixed.basis;
  const ScalarMatrix a_span =
      rings::stacked_columns(ring, fixed.basis.size(), [&](std::size_t k) { return std::vector<Value>{fixed.basis[k]}; });

  std::vector<Value> atoms{ring.one()};
  if (const auto* p = dynamic_cast<const ProductRing*>(&ring)) atoms = p->idempotents();
  const std::size_t s = atoms.size();
  if (s > kUdimMaxDimension) throw Error(Errc::Unsupported, "too many components for idempotent search");

  // Subsets S with e_S in A; the minimal nonempty ones are the primitive idempotents.
  const auto e_of = [&](std::uint32_t mask) {
    Value e = ring.zero();
    for (std::size_t i = 0; i < s; ++i) {
      if ((mask >> i) & 1U) e = ring.add(e, atoms[i]);
    }
    return e;
  };
  std::vector<std::uint32_t> blocks;
  std::uint32_t covered = 0;
  for (std::uint32_t mask = 1; mask < (1U << s); ++mask) {
    if (!in_span(ring, a_span, e_of(mask))) continue;
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      if (in_span(ring, a_span, e_of(sub))) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      blocks.push_back(mask);
      covered |= mask;
    }
  }
  if (covered != (1U << s) - 1U) throw Error(Errc::Unsupported, "fixed algebra idempotents do not cover the ring");

  for (std::uint32_t mask : blocks) {
    const Value e = e_of(mask);
    std::vector<Value> ea;
    for (const Value& a : fixed.basis) ea.push_back(ring.mul(e, a));
    ea = span_basis(ring, ea);
    if (!is_reduced(ring, ea)) {
      throw Error(Errc::Unsupported, "e·A is not a field for e = " + ring.render(e));
    }
    std::vector<Value> ez;
    for (const Value& z : fixed.center_basis) ez.push_back(ring.mul(e, z));
    const std::size_t dz = span_basis(ring, ez).size();
    if (dz % ea.size() != 0) throw Error(Errc::Unsupported, "e·Z is not free over e·A");
    rep.idempotents.push_back(e);
    rep.field_degree.push_back(ea.size());
    rep.dims.push_back(dz / ea.size());
    rep.total += dz / ea.size();
  }
  return rep;
}

KernelChainReport kernel_chain(const Endo& sigma, std::uint32_t bound) {
  const auto* p = dynamic_cast<const rings::PolyRing*>(sigma.ring().get());
  if (p == nullptr || (sigma.kind() != twists::EndoKind::VariableMap && sigma.kind() != twists::EndoKind::Identity)) {
    throw Error(Errc::Unsupported, "kernel chains need a variable-map endomorphism of a polynomial ring");
  }
  if (std::any_of(p->truncation().begin(), p->truncation().end(), [](std::uint32_t t) { return t != 0; })) {
    throw Error(Errc::Unsupported, "kernel chains need an untruncated polynomial ring");
  }
  const std::size_t nv = p->variables().size();
  // target[i]: index of the variable y_i maps to (up to a scalar), or nv when killed.
  std::vector<std::size_t> target(nv, nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const Value img = sigma(p->variable(i));
    if (p->is_zero(img)) continue;
    const auto& terms = img.as<rings::Poly>().terms;
    bool found = false;
    if (terms.size() == 1) {
      const auto& ex = terms.begin()->first;
      if (std::accumulate(ex.begin(), ex.end(), 0U) == 1) {
        target[i] = static_cast<std::size_t>(std::find(ex.begin(), ex.end(), 1U) - ex.begin());
        found = true;
      }
    }
    if (!found) {
      throw Error(Errc::Unsupported, "σ(" + p->variables()[i] + ") = " + p->render(img) + " is not a scaled variable");
    }
  }
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < nv; ++i) {
    if (target[i] != nv) survivors.push_back(target[i]);
  }
  std::sort(survivors.begin(), survivors.end());
  if (std::adjacent_find(survivors.begin(), survivors.end()) != survivors.end()) {
    throw Error(Errc::Unsupported, "two variables share an image; the kernel is not a monomial ideal");
  }

  KernelChainReport rep;
  rep.unbounded_family = p->unbounded_family();
  std::vector<std::size_t> pos(nv);
  std::iota(pos.begin(), pos.end(), 0);
  rep.kernels.emplace_back();
  for (std::uint32_t k = 1; k <= bound + 1; ++k) {
    std::vector<std::size_t> ker;
    for (std::size_t i = 0; i < nv; ++i) {
      if (pos[i] != nv) pos[i] = target[pos[i]];
      if (pos[i] == nv) ker.push_back(i);
    }
    const bool same = ker == rep.kernels.back();
    rep.kernels.push_back(std::move(ker));
    if (same) {
      rep.n = k - 1;
      rep.stabilized = !rep.unbounded_family;
      return rep;
    }
  }
  rep.n = bound;
  return rep;
}

JordanReport jordan_closure_probe(const Endo& sigma, const std::vector<Value>& probes, std::uint32_t depth) {
  if (sigma.kind() != twists::EndoKind::Inner || !sigma.rep().ambient) {
    throw Error(Errc::Unsupported, "Jordan closure probes need an inner σ with an ambient ring");
  }
  const Ring& ring = *sigma.ring();
  const Ring& amb = *sigma.rep().ambient;
  const auto step = [&](const Value& a) { return amb.mul(amb.mul(sigma.rep().u_inv, a), sigma.rep().u); };
  JordanReport rep;
  rep.depth = depth;
  for (const Value& a : probes) {
    if (!amb.contains(a)) throw Error(Errc::RingMismatch, amb.render(a) + " is not in " + amb.descriptor());
    JordanProbe probe{.element = a};
    Value v = a;
    for (std::uint32_t i = 0; i <= depth; ++i) {
      const bool member = ring.contains(v);
      if (member && !probe.level) probe.level = i;
      if (probe.level && !member) probe.ascending = false;
      v = step(v);
    }
    rep.chain_ascending = rep.chain_ascending && probe.ascending;
    rep.probes.push_back(std::move(probe));
  }
  return rep;
}

}  // namespace skewlab::centerlab
