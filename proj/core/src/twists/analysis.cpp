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

#include "skewlab/twists/analysis.hpp"

#include <algorithm>
#include <set>

#include "skewlab/error.hpp"
#include "skewlab/rings/solve.hpp"

namespace skewlab::twists {

using rings::Ring;
using rings::Rng;
using rings::ScalarMatrix;

std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string pair_detail(const Ring& ring, const Value& a, const Value& b, const Value& lhs, const Value& rhs) {
  return "a = " + ring.render(a) + ", b = " + ring.render(b) + ": lhs = " + ring.render(lhs) +
         ", rhs = " + ring.render(rhs);
}

std::optional<LawFailure> sigma_pair(const Endo& sigma, const Value& a, const Value& b) {
  const Ring& ring = *sigma.ring();
  const Value sa = sigma(a);
  const Value sb = sigma(b);
  Value lhs = sigma(ring.add(a, b));
  Value rhs = ring.add(sa, sb);
  if (!ring.equal(lhs, rhs)) return LawFailure{"sigma-additive", pair_detail(ring, a, b, lhs, rhs)};
  lhs = sigma(ring.mul(a, b));
  rhs = ring.mul(sa, sb);
  if (!ring.equal(lhs, rhs)) return LawFailure{"sigma-multiplicative", pair_detail(ring, a, b, lhs, rhs)};
  return std::nullopt;
}

std::optional<LawFailure> delta_pair(const SigmaDeriv& delta, const Value& a, const Value& b) {
  const Ring& ring = *delta.ring();
  const Value da = delta(a);
  const Value db = delta(b);
  Value lhs = delta(ring.add(a, b));
  Value rhs = ring.add(da, db);
  if (!ring.equal(lhs, rhs)) return LawFailure{"delta-additive", pair_detail(ring, a, b, lhs, rhs)};
  lhs = delta(ring.mul(a, b));
  rhs = ring.add(ring.mul(delta.sigma()(a), db), ring.mul(da, b));
  if (!ring.equal(lhs, rhs)) return LawFailure{"leibniz", pair_detail(ring, a, b, lhs, rhs)};
  return std::nullopt;
}

}  // namespace

std::optional<LawFailure> check_leibniz(const SigmaDeriv& delta, std::size_t samples, std::uint64_t seed) {
  const Ring& ring = *delta.ring();
  const auto gens = ring.generators();
  for (const Value& a : gens) {
    for (const Value& b : gens) {
      if (auto f = delta_pair(delta, a, b)) return f;
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Value a = ring.random(rng);
    const Value b = ring.random(rng);
    if (auto f = delta_pair(delta, a, b)) return f;
  }
  return std::nullopt;
}

TwistReport validate_twist(const Endo& sigma, const SigmaDeriv& delta, std::size_t samples, std::uint64_t seed) {
  TwistReport report;
  report.seed = seed;
  const Ring& ring = *sigma.ring();
  auto fail = [&](LawFailure f) {
    report.pass = false;
    report.failure = std::move(f);
  };
  std::tie(report.injective, report.injectivity_method) = decide_injective(sigma);

  if (!rings::same_ring(*delta.ring(), ring)) {
    fail({"delta-ring", "δ acts on " + delta.ring()->descriptor()});
    return report;
  }
  if (!ring.equal(sigma(ring.one()), ring.one())) {
    fail({"sigma-unital", "σ(1) = " + ring.render(sigma(ring.one()))});
    return report;
  }
  const auto gens = ring.generators();
  for (const Value& g : gens) {
    if (!ring.contains(sigma(g))) {
      fail({"sigma-stable", "σ(" + ring.render(g) + ") = " + ring.render(sigma(g))});
      return report;
    }
    if (!ring.contains(delta(g))) {
      fail({"delta-stable", "δ(" + ring.render(g) + ") = " + ring.render(delta(g))});
      return report;
    }
  }
  auto check = [&](const Value& a, const Value& b) {
    if (auto f = sigma_pair(sigma, a, b)) {
      fail(*f);
      return false;
    }
    if (auto f = delta_pair(delta, a, b)) {
      fail(*f);
      return false;
    }
    return true;
  };
  for (const Value& a : gens) {
    for (const Value& b : gens) {
      ++report.generator_pairs;
      if (!check(a, b)) return report;
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Value a = ring.random(rng);
    const Value b = ring.random(rng);
    ++report.sampled_pairs;
    if (!check(a, b)) return report;
  }
  return report;
}

ScalarMatrix endo_matrix(const Endo& sigma) {
  const Ring& ring = *sigma.ring();
  rings::require_finite_basis(ring, "endomorphism matrix");
  const auto basis = ring.basis();
  return rings::stacked_columns(ring, basis.size(), [&](std::size_t k) { return std::vector<Value>{sigma(basis[k])}; });
}

namespace {

// Exact rule for maps sending every variable to a variable or to 0.
std::optional<Tri> variable_rule(const Endo& sigma) {
  const auto& p = static_cast<const rings::PolyRing&>(*sigma.ring());
  std::set<std::size_t> targets;
  bool killed = false;
  for (std::size_t i = 0; i < sigma.rep().images.size(); ++i) {
    const Value& img = sigma.rep().images[i];
    if (p.is_zero(img)) {
      killed = true;
      continue;
    }
    std::optional<std::size_t> target;
    for (std::size_t j = 0; j < p.variables().size(); ++j) {
      if (p.equal(img, p.variable(j))) target = j;
    }
    if (!target) return std::nullopt;
    if (p.truncation()[*target] != p.truncation()[i]) return std::nullopt;
    targets.insert(*target);
  }
  if (killed) return Tri::False;
  return targets.size() == sigma.rep().images.size() ? Tri::True : Tri::False;
}

// Char 0, no truncation: the images are algebraically independent iff the
// Jacobian determinant is nonzero.
std::optional<Tri> jacobian_rule(const Endo& sigma) {
  const auto& p = static_cast<const rings::PolyRing&>(*sigma.ring());
  if (p.base_field().characteristic() != 0 || p.unbounded_family()) return std::nullopt;
  for (std::uint32_t b : p.truncation()) {
    if (b != 0) return std::nullopt;
  }
  const std::size_t n = p.variables().size();
  const RingPtr ring = sigma.ring();
  const auto mat = rings::make_matrix(ring, n);
  const auto& m = static_cast<const rings::MatrixRing&>(*mat);
  const Endo id = identity(ring);
  Value jac = m.zero();
  for (std::size_t j = 0; j < n; ++j) {
    const SigmaDeriv d = partial_derivative(id, j);
    for (std::size_t i = 0; i < n; ++i) {
      const Value entry = d(sigma.rep().images[i]);
      jac = m.add(jac, m.mul(m.scalar_matrix(entry), m.unit(i, j)));
    }
  }
  return p.is_zero(m.det(jac)) ? Tri::False : Tri::True;
}

Tri by_kind(const Endo& sigma) {
  const EndoRep& e = sigma.rep();
  switch (e.kind) {
    case EndoKind::Identity:
    case EndoKind::Inner:
    case EndoKind::Conjugation: return Tri::True;
    case EndoKind::ComponentMap: {
      std::set<std::size_t> hit(e.source.begin(), e.source.end());
      if (hit.size() < e.source.size()) return Tri::False;
      Tri all = Tri::True;
      for (const Endo& m : e.maps) {
        const Tri t = decide_injective(m).first;
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Unknown) all = Tri::Unknown;
      }
      return all;
    }
    case EndoKind::Power: return decide_injective(e.parts[0]).first;
    case EndoKind::Composite: {
      const Tri f = decide_injective(e.parts[0]).first;
      const Tri g = decide_injective(e.parts[1]).first;
      if (g == Tri::False) return Tri::False;
      if (f == Tri::True && g == Tri::True) return Tri::True;
      return Tri::Unknown;
    }
    case EndoKind::Localized: {
      const Tri base = decide_injective(e.parts[0]).first;
      return base == Tri::True ? Tri::True : Tri::Unknown;
    }
    default: return Tri::Unknown;
  }
}

}  // namespace

std::pair<Tri, std::string> decide_injective(const Endo& sigma) {
  if (sigma.kind() == EndoKind::VariableMap) {
    if (auto t = variable_rule(sigma)) return {*t, "variable-map rule"};
    if (auto t = jacobian_rule(sigma)) return {*t, "jacobian rule"};
  }
  if (auto dim = sigma.ring()->dimension()) {
    return {rings::rank(endo_matrix(sigma)) == *dim ? Tri::True : Tri::False, "rank"};
  }
  const Tri t = by_kind(sigma);
  if (t != Tri::Unknown) return {t, "kind rule"};
  return {Tri::Unknown, "undecided"};
}

std::optional<std::uint32_t> endo_order_on_center(const Endo& sigma, std::uint32_t bound) {
  const Ring& ring = *sigma.ring();
  const auto center = ring.center();
  std::vector<Value> current = center.elements;
  for (std::uint32_t n = 1; n <= bound; ++n) {
    bool fixed = true;
    for (std::size_t k = 0; k < current.size(); ++k) {
      current[k] = sigma(current[k]);
      fixed = fixed && ring.equal(current[k], center.elements[k]);
    }
    if (fixed) return n;
  }
  return std::nullopt;
}

FixedSubalgebra fixed_subalgebra(const Endo& sigma, const SigmaDeriv& delta) {
  const Ring& ring = *sigma.ring();
  rings::require_finite_basis(ring, "fixed subalgebra");
  const auto center = ring.center();
  if (!center.linear_span) throw Error(Errc::Unsupported, "center of " + ring.descriptor() + " has no finite basis");
  const auto& z = center.elements;
  const ScalarMatrix span = rings::stacked_columns(ring, z.size(), [&](std::size_t k) { return std::vector<Value>{z[k]}; });
  for (const Value& zk : z) {
    if (!rings::solve(span, ring.coords(sigma(zk)))) {
      throw Error(Errc::CenterNotStable, "σ(" + ring.render(zk) + ") = " + ring.render(sigma(zk)) + " is not central");
    }
    if (!rings::solve(span, ring.coords(delta(zk)))) {
      throw Error(Errc::CenterNotStable, "δ(" + ring.render(zk) + ") = " + ring.render(delta(zk)) + " is not central");
    }
  }
  const ScalarMatrix cond = rings::stacked_columns(ring, z.size(), [&](std::size_t k) {
    return std::vector<Value>{ring.sub(sigma(z[k]), z[k]), delta(z[k])};
  });
  FixedSubalgebra out;
  out.center_basis = z;
  for (const auto& c : rings::nullspace(cond)) out.basis.push_back(rings::combine(ring, c, z));
  return out;
}

namespace {

// First invertible 0/±1 combination of the leading kernel vectors, in order of
// support size, then index combination, then sign pattern (+ before −).
std::optional<Value> scan_invertible(const Ring& ring, const std::vector<rings::ScalarVector>& kernel,
                                     const std::vector<Value>& basis, std::size_t scan_dimension) {
  const std::size_t t = std::min(kernel.size(), scan_dimension);
  if (t == 0) return std::nullopt;
  const std::size_t dim = basis.size();
  for (std::size_t support = 1; support <= t; ++support) {
    std::vector<bool> pick(t, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(support), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < t; ++i) {
        if (pick[i]) idx.push_back(i);
      }
      for (std::size_t signs = 0; signs < (std::size_t{1} << (support - 1)); ++signs) {
        rings::ScalarVector coeff(dim, ring.coord_zero());
        for (std::size_t s = 0; s < support; ++s) {
          const bool minus = s > 0 && ((signs >> (s - 1)) & 1U);
          for (std::size_t r = 0; r < dim; ++r) {
            coeff[r] = minus ? coeff[r] - kernel[idx[s]][r] : coeff[r] + kernel[idx[s]][r];
          }
        }
        // Normalize the first nonzero coordinate to 1.
        auto lead = std::find_if(coeff.begin(), coeff.end(), [](const rings::Scalar& c) { return !c.is_zero(); });
        if (lead == coeff.end()) continue;
        const rings::Scalar scale = lead->inverse();
        for (auto& c : coeff) c = c * scale;
        Value u = rings::combine(ring, coeff, basis);
        if (ring.inverse(u)) return u;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

std::vector<rings::ScalarVector> witness_kernel(const Endo& tau, const Endo* fixed_by) {
  const Ring& ring = *tau.ring();
  const auto basis = ring.basis();
  std::vector<Value> images;
  for (const Value& r : basis) images.push_back(tau(r));
  const ScalarMatrix m = rings::stacked_columns(ring, basis.size(), [&](std::size_t k) {
    std::vector<Value> rows;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      rows.push_back(ring.sub(ring.mul(basis[k], images[j]), ring.mul(basis[j], basis[k])));
    }
    if (fixed_by) rows.push_back(ring.sub((*fixed_by)(basis[k]), basis[k]));
    return rows;
  });
  return rings::nullspace(m);
}

}  // namespace

std::optional<Value> inner_auto_witness(const Endo& tau, const WitnessOptions& options) {
  const Ring& ring = *tau.ring();
  rings::require_finite_basis(ring, "inner witness");
  return scan_invertible(ring, witness_kernel(tau, nullptr), ring.basis(), options.scan_dimension);
}

std::optional<InnerWitness> inner_auto_witness(const Endo& tau, const Endo& sigma, std::uint32_t n,
                                               const WitnessOptions& options) {
  const Ring& ring = *tau.ring();
  rings::require_finite_basis(ring, "inner witness");
  if (!rings::same_ring(*sigma.ring(), ring)) throw Error(Errc::RingMismatch, "σ and τ act on different rings");
  const auto basis = ring.basis();
  for (const Value& r : basis) {
    if (!ring.equal(sigma.apply_power(r, n), tau(r))) {
      throw Error(Errc::PreconditionViolation, "σ^" + std::to_string(n) + " differs from τ at " + ring.render(r));
    }
  }
  std::optional<Value> w = scan_invertible(ring, witness_kernel(tau, nullptr), basis, options.scan_dimension);
  std::optional<Value> norm;
  if (w) {
    Value p = *w;
    Value factor = *w;
    for (std::uint32_t i = 1; i < n; ++i) {
      factor = sigma(factor);
      p = ring.mul(p, factor);
    }
    if (ring.equal(sigma(p), p)) norm = p;
  }
  if (auto fixed = scan_invertible(ring, witness_kernel(tau, &sigma), basis, options.scan_dimension)) {
    return InnerWitness{*fixed, true, norm};
  }
  if (!w) return std::nullopt;
  return InnerWitness{*w, ring.equal(sigma(*w), *w), norm};
}

}  // namespace skewlab::twists
