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

#ifndef SKEWLAB_RINGS_RING_HPP
#define SKEWLAB_RINGS_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/rings/linalg.hpp"
#include "skewlab/rings/literal.hpp"
#include "skewlab/rings/random.hpp"
#include "skewlab/rings/scalar.hpp"
#include "skewlab/rings/value.hpp"

namespace skewlab::rings {

enum class RingKind { Field, Polynomial, Mixed, Matrix, ConstrainedMatrix, Product, Localization };

std::string_view ring_kind_name(RingKind kind);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A spanning set of the center. When `linear_span` is false the elements
/// only generate the center as a unital algebra over the base field
/// (e.g. {I, yI} for M_2(Q[y])).
struct CenterDescription {
  std::vector<Value> elements;
  bool linear_span = true;
};

/// A concretely represented coefficient ring.  Values are interpreted by the
/// ring they belong to; every operation returns canonical values.
///
/// Rings are immutable and shared; all members are safe to call concurrently.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  virtual RingKind kind() const = 0;
  /// Canonical description; two rings with equal descriptors are the same ring.
  virtual std::string descriptor() const = 0;
  /// Field of scalars acting on the ring (coordinates are over its prime field).
  virtual const ScalarField& base_field() const = 0;
  std::uint64_t characteristic() const { return base_field().characteristic(); }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  /// s * 1 for a scalar of the base field (or a Q-family scalar to be embedded).
  virtual Value from_scalar(const Scalar& s) const = 0;

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value scale(const Scalar& s, const Value& a) const = 0;
  virtual bool equal(const Value& a, const Value& b) const = 0;
  virtual bool is_zero(const Value& a) const { return equal(a, zero()); }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value pow(const Value& a, std::uint32_t e) const;
  /// Canonical form of a value of the right shape.
  virtual Value normalize(const Value& a) const { return a; }

  /// Membership predicate for a value of this ring's representation.
  virtual bool contains(const Value& a) const = 0;
  /// Finite list of generators (as a unital algebra over the scalars acting
  /// on the ring); used to check maps and centrality.
  virtual std::vector<Value> generators() const = 0;
  /// Seeded sample; coefficients come from Rng's integer box.
  virtual Value random(Rng& rng) const = 0;

  virtual std::string render(const Value& a) const = 0;
  /// Evaluates a parsed literal in this ring; throws BadLiteral.
  Value evaluate(const Expr& e) const;
  Value parse(std::string_view text) const;
  /// Evaluates without the final membership check; subrings evaluate in
  /// their ambient ring this way.
  Value evaluate_unchecked(const Expr& e) const;

  virtual bool is_commutative() const = 0;
  /// nullopt when primeness is not decided for this kind.
  virtual std::optional<bool> is_prime() const { return std::nullopt; }

  /// Dimension over the prime field of base_field(), when finite.
  virtual std::optional<std::size_t> dimension() const { return std::nullopt; }
  /// Coordinates over the prime field; requires dimension().
  virtual std::vector<Scalar> coords(const Value& a) const;
  virtual Value from_coords(std::span<const Scalar> c) const;
  std::vector<Value> basis() const;
  Scalar coord_zero() const;

  /// Neither a left nor a right zero divisor.  Throws Unsupported.
  virtual bool is_regular(const Value& a) const;
  /// Two-sided inverse if one exists in the ring.  Throws Unsupported.
  virtual std::optional<Value> inverse(const Value& a) const;
  /// a * d^{-1} when it exists in this ring (d regular).
  virtual std::optional<Value> divide(const Value& a, const Value& d) const;
  /// Throws Unsupported when no decision procedure exists.
  virtual CenterDescription center() const;
  /// Ring whose representation this ring shares (for entry-constrained and
  /// mixed subrings); nullptr when the ring is not a subring of another.
  virtual RingPtr ambient() const { return nullptr; }

  RingPtr self() const { return shared_from_this(); }

 protected:
  // Literal hooks; nullopt means "not understood here".
  virtual std::optional<Value> symbol(std::string_view name) const;
  virtual std::optional<Value> call(std::string_view name, std::span<const Expr> args) const;
  virtual std::optional<Value> tuple(std::span<const Expr> items) const;
  virtual std::optional<Value> bracket(std::span<const Expr> items) const;
  /// Finite-basis fallback used by is_regular / inverse / center.
  std::vector<ScalarVector> multiplication_columns(const Value& a, bool left) const;
};

bool same_ring(const Ring& a, const Ring& b);

/// An element together with its ring; the arithmetic operators check that
/// both operands live in the same ring (RingMismatch otherwise).
class RingElem {
 public:
  RingElem(RingPtr ring, Value value);

  const RingPtr& ring() const noexcept { return ring_; }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const { return ring_->is_zero(value_); }
  std::string to_string() const { return ring_->render(value_); }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  RingPtr ring_;
  Value value_;
};

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_RING_HPP
