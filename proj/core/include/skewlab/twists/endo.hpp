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

#ifndef SKEWLAB_TWISTS_ENDO_HPP
#define SKEWLAB_TWISTS_ENDO_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/rings/catalog.hpp"

namespace skewlab::twists {

using rings::RingPtr;
using rings::Value;

enum class EndoKind {
  Identity,
  Inner,        // r ↦ u^{-1} r u, u invertible in an ambient ring
  VariableMap,  // substitution y_i ↦ p_i on a polynomial ring
  Additive,     // linear map given on variables, identity on other monomials
  ComponentMap, // σ(r)_j = φ_j(r_{source(j)}) on a product
  Conjugation,  // a+bi ↦ a−bi on every scalar
  Power,
  Composite,
  Localized,    // r/u^k ↦ σ(r)/u^k
  Restricted,   // σ on a block of product components
};

std::string_view endo_kind_name(EndoKind kind);

struct EndoRep;

/// A ring endomorphism σ with value semantics.
class Endo {
 public:
  explicit Endo(std::shared_ptr<const EndoRep> rep) : rep_(std::move(rep)) {}

  const RingPtr& ring() const;
  EndoKind kind() const;
  Value apply(const Value& r) const;
  Value operator()(const Value& r) const { return apply(r); }
  /// σ^k(r).
  Value apply_power(const Value& r, std::uint32_t k) const;
  std::string describe() const;
  /// σ(g) for the ring's generators, in generator order.
  const std::vector<Value>& generator_images() const;
  const EndoRep& rep() const { return *rep_; }
  /// Same underlying map object (not extensional equality).
  bool same(const Endo& other) const { return rep_ == other.rep_; }

 private:
  std::shared_ptr<const EndoRep> rep_;
};

struct EndoRep {
  EndoKind kind = EndoKind::Identity;
  RingPtr ring;
  // Inner
  RingPtr ambient;
  Value u;
  Value u_inv;
  // VariableMap, Additive
  std::vector<Value> images;
  // ComponentMap (maps[j] acts on component source[j]); Restricted (indices)
  std::vector<std::size_t> source;
  std::vector<Endo> maps;
  // Power, Composite, Localized, Restricted
  std::vector<Endo> parts;
  std::uint32_t exponent = 1;
  std::vector<Value> generator_images;
};

Endo identity(RingPtr ring);
/// σ(r) = u^{-1} r u computed in `ambient` (default: the ring's ambient ring,
/// or the ring itself).  Throws WitnessNotInvertible, NotStable.
Endo inner(RingPtr ring, const Value& u, RingPtr ambient = nullptr);
/// Substitution; images[i] is σ(y_i).  Throws NotStable when a truncation
/// relation is not preserved.
Endo variable_map(RingPtr ring, std::vector<Value> images);
/// y_1 ↦ 0, y_k ↦ y_{k-1}.
Endo shift(RingPtr ring);
/// Additive-only map: variables go to `images`, other monomials are fixed.
/// Not a homomorphism in general; exists to exercise validation.
Endo additive_map(RingPtr ring, std::vector<Value> images);
/// `maps` defaults to identities; maps[j] must act on component source[j],
/// which must be the same ring as component j.
Endo component_map(RingPtr product, std::vector<std::size_t> source, std::vector<Endo> maps = {});
/// Component i is carried to component perm[i].
Endo component_permutation(RingPtr product, const std::vector<std::size_t>& perm, std::vector<Endo> maps = {});
Endo conjugation(RingPtr ring);
Endo power(const Endo& sigma, std::uint32_t n);
/// f ∘ g.
Endo compose(const Endo& f, const Endo& g);
/// Extension of σ to a localization at a σ-fixed element.  Throws NotStable.
Endo localized(RingPtr localization, const Endo& sigma);
/// σ restricted to the block ring made of the product components `indices`.
Endo restricted(const Endo& sigma, RingPtr block, std::vector<std::size_t> indices);

/// Declarative form used by scenarios.
struct EndoSpec {
  std::string kind;                    // identity | inner | variable-map | shift | additive |
                                       // component-map | conjugation | power | localized
  std::string u;                       // inner witness literal
  std::optional<RingPtr> ambient;      // inner: ring in which u is inverted
  std::vector<std::string> images;     // variable-map / additive
  std::vector<std::size_t> perm;       // component-map: component i ↦ perm[i]
  std::vector<std::size_t> source;     // component-map alternative: σ(r)_j from r_{source[j]}
  std::vector<EndoSpec> maps;          // component-map per-component maps; power/localized inner spec
  std::uint32_t exponent = 1;
};

/// Throws NotStable, WitnessNotInvertible, UnsupportedKind, BadLiteral.
Endo endo_make(RingPtr ring, const EndoSpec& spec);

// ---------------------------------------------------------------------------

enum class DerivKind { Zero, Inner, Partial, Componentwise, Restricted };

std::string_view deriv_kind_name(DerivKind kind);

struct DerivRep;

/// A σ-derivation: additive, δ(ab) = σ(a)δ(b) + δ(a)b.
class SigmaDeriv {
 public:
  explicit SigmaDeriv(std::shared_ptr<const DerivRep> rep) : rep_(std::move(rep)) {}

  const Endo& sigma() const;
  const RingPtr& ring() const;
  DerivKind kind() const;
  Value apply(const Value& r) const;
  Value operator()(const Value& r) const { return apply(r); }
  bool is_zero_map() const { return kind() == DerivKind::Zero; }
  std::string describe() const;
  const DerivRep& rep() const { return *rep_; }

 private:
  std::shared_ptr<const DerivRep> rep_;
};

struct DerivRep {
  DerivKind kind = DerivKind::Zero;
  Endo sigma;
  Value b;                             // Inner adjoint element
  std::size_t variable = 0;            // Partial
  std::vector<SigmaDeriv> parts;       // Componentwise, Restricted
  std::vector<std::size_t> indices;    // Restricted
};

SigmaDeriv zero_derivation(const Endo& sigma);
/// δ(r) = b r − σ(r) b.
SigmaDeriv inner_derivation(const Endo& sigma, const Value& b);
/// d/dy_var on a polynomial ring; needs σ = id.  Throws IllDefined when the
/// derivative does not descend through a truncation.
SigmaDeriv partial_derivative(const Endo& sigma, std::size_t var);
/// Componentwise δ on a product whose σ keeps every component in place.
SigmaDeriv componentwise(const Endo& sigma, std::vector<SigmaDeriv> parts);
SigmaDeriv restricted(const SigmaDeriv& delta, const Endo& block_sigma, std::vector<std::size_t> indices);

struct DerivSpec {
  std::string kind;  // zero | inner | partial | componentwise
  std::string b;
  std::string variable;
  std::vector<DerivSpec> parts;
};

/// Builds δ and checks the Leibniz law on generator pairs and 64 sampled
/// pairs (seed 0).  Throws LeibnizViolation, IllDefined, UnsupportedKind.
SigmaDeriv deriv_make(const Endo& sigma, const DerivSpec& spec);

}  // namespace skewlab::twists

#endif  // SKEWLAB_TWISTS_ENDO_HPP
