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

#ifndef SKEWLAB_ORE_OREPOLY_HPP
#define SKEWLAB_ORE_OREPOLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/rings/catalog.hpp"
#include "skewlab/twists/endo.hpp"

namespace skewlab::ore {

using rings::RingPtr;
using rings::Value;
using twists::Endo;
using twists::SigmaDeriv;

class OreContext;
using ContextPtr = std::shared_ptr<const OreContext>;

/// R[x; σ, δ].  Contexts compare by identity.
class OreContext : public std::enable_shared_from_this<OreContext> {
 public:
  /// Throws ContextMismatch when δ is a derivation for a different σ.  An
  /// empty `var` picks the first of x, y, z not already a ring symbol.
  static ContextPtr make(const Endo& sigma, const SigmaDeriv& delta, std::string var = "");

  const RingPtr& ring() const { return sigma_.ring(); }
  const Endo& sigma() const { return sigma_; }
  const SigmaDeriv& delta() const { return delta_; }
  const std::string& var() const { return var_; }
  bool delta_is_zero() const { return delta_.is_zero_map(); }
  std::string describe() const;
  /// The same σ with δ = 0 (the associated graded context).
  ContextPtr graded() const;

 private:
  OreContext(Endo sigma, SigmaDeriv delta, std::string var)
      : sigma_(std::move(sigma)), delta_(std::move(delta)), var_(std::move(var)) {}

  Endo sigma_;
  SigmaDeriv delta_;
  std::string var_;
};

/// c_0 + c_1 x + … + c_n x^n with left coefficients.
class OrePoly {
 public:
  OrePoly(ContextPtr ctx, std::vector<Value> coeffs);

  static OrePoly zero(const ContextPtr& ctx) { return {ctx, {}}; }
  static OrePoly constant(const ContextPtr& ctx, const Value& c) { return {ctx, {c}}; }
  static OrePoly monomial(const ContextPtr& ctx, const Value& c, std::size_t degree);
  static OrePoly x(const ContextPtr& ctx) { return monomial(ctx, ctx->ring()->one(), 1); }

  const ContextPtr& context() const { return ctx_; }
  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Value coeff(std::size_t i) const;
  const Value& lead() const { return coeffs_.back(); }

  friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  OrePoly operator-() const;
  friend bool operator==(const OrePoly& a, const OrePoly& b);

  OrePoly pow(std::uint32_t k) const;
  /// Same coefficients read in another context over the same ring.
  OrePoly in(const ContextPtr& other) const;
  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::vector<Value> coeffs_;
};

/// x·a = σ(a)x + δ(a).
OrePoly x_times_elem(const ContextPtr& ctx, const Value& a);
OrePoly x_times_elem(const ContextPtr& ctx, const rings::RingElem& a);
/// x·p.
OrePoly x_times(const OrePoly& p);
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);
OrePoly ore_commutator(const OrePoly& f, const OrePoly& g);

struct GradedLeadReport {
  int degree_f = -1;
  int degree_g = -1;
  int product_degree = -1;
  Value expected_lead;     // lead(f)·σ^{deg f}(lead(g))
  bool expected_nonzero = false;
  bool lead_matches = false;        // product coefficient at deg f + deg g equals expected
  bool graded_matches = false;      // and equals the δ = 0 product's coefficient
  bool pass = false;
};

GradedLeadReport graded_lead_check(const OrePoly& f, const OrePoly& g);

OrePoly random_ore(const ContextPtr& ctx, rings::Rng& rng, std::uint32_t max_degree);

/// Literal such as "E12*x^2 + 1"; subterms without the variable are ring literals.
OrePoly parse_ore(const ContextPtr& ctx, std::string_view text);
OrePoly evaluate_ore(const ContextPtr& ctx, const rings::Expr& e);

}  // namespace skewlab::ore

#endif  // SKEWLAB_ORE_OREPOLY_HPP
