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

#ifndef SKEWLAB_RINGS_CATALOG_HPP
#define SKEWLAB_RINGS_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/rings/ring.hpp"

namespace skewlab::rings {

// ---------------------------------------------------------------------------
// Entry constraints for subrings of Q[x].

enum class ConstPart : std::uint8_t { Zero, Integer, Dyadic, Rational };

/// A subset of Q[x] of the form C + (tail ? xQ[x] : 0) with C one of
/// 0, Z, Z[1/2], Q.
struct Constraint {
  ConstPart constant = ConstPart::Rational;
  bool tail = true;

  /// Accepts Z, Z[1/2], Q, Z+xQ[x], Z[1/2]+xQ[x], xQ[x], Q[x].
  static Constraint parse(std::string_view name);
  std::string name() const;

  /// Membership of a univariate rational polynomial (single variable x).
  bool admits(const Poly& p) const;
  /// this ⊇ other
  bool includes(const Constraint& other) const;
  bool has_one() const { return constant != ConstPart::Zero; }

  friend Constraint operator*(const Constraint& a, const Constraint& b);
  friend bool operator==(const Constraint& a, const Constraint& b) = default;
};

// ---------------------------------------------------------------------------
// Concrete rings.

class FieldRing final : public Ring {
 public:
  explicit FieldRing(ScalarField field) : field_(field) {}

  RingKind kind() const override { return RingKind::Field; }
  std::string descriptor() const override { return field_.name(); }
  const ScalarField& base_field() const override { return field_; }
  Value zero() const override { return field_.zero(); }
  Value one() const override { return field_.one(); }
  Value from_scalar(const Scalar& s) const override { return field_.embed(s); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value scale(const Scalar& s, const Value& a) const override;
  bool equal(const Value& a, const Value& b) const override;
  bool contains(const Value& a) const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  std::string render(const Value& a) const override;
  bool is_commutative() const override { return true; }
  std::optional<bool> is_prime() const override { return true; }
  std::optional<std::size_t> dimension() const override { return field_.degree(); }
  std::vector<Scalar> coords(const Value& a) const override;
  Value from_coords(std::span<const Scalar> c) const override;
  bool is_regular(const Value& a) const override;
  std::optional<Value> inverse(const Value& a) const override;

 private:
  ScalarField field_;
};

/// F[y_1..y_m], optionally truncated by y_i^{b_i} = 0.  A polynomial ring
/// flagged as an unbounded family stands for the union over growing m.
class PolyRing final : public Ring {
 public:
  PolyRing(ScalarField field, std::vector<std::string> vars, std::vector<std::uint32_t> truncation,
           bool unbounded_family);

  const std::vector<std::string>& variables() const { return vars_; }
  /// 0 for an untruncated variable.
  const std::vector<std::uint32_t>& truncation() const { return truncation_; }
  bool unbounded_family() const { return unbounded_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  Value variable(std::size_t i) const;
  Value monomial(const Exponents& e, const Scalar& c) const;

  RingKind kind() const override { return RingKind::Polynomial; }
  std::string descriptor() const override;
  const ScalarField& base_field() const override { return field_; }
  Value zero() const override { return Poly{}; }
  Value one() const override;
  Value from_scalar(const Scalar& s) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value scale(const Scalar& s, const Value& a) const override;
  bool equal(const Value& a, const Value& b) const override;
  bool is_zero(const Value& a) const override { return a.as<Poly>().terms.empty(); }
  Value normalize(const Value& a) const override;
  bool contains(const Value& a) const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  std::string render(const Value& a) const override;
  bool is_commutative() const override { return true; }
  std::optional<bool> is_prime() const override;
  std::optional<std::size_t> dimension() const override;
  std::vector<Scalar> coords(const Value& a) const override;
  Value from_coords(std::span<const Scalar> c) const override;
  bool is_regular(const Value& a) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::optional<Value> divide(const Value& a, const Value& d) const override;
  CenterDescription center() const override;

 protected:
  std::optional<Value> symbol(std::string_view name) const override;

 private:
  bool truncated(const Exponents& e) const;
  Exponents monomial_of_index(std::size_t index) const;
  std::size_t index_of_monomial(const Exponents& e) const;

  ScalarField field_;
  std::vector<std::string> vars_;
  std::vector<std::uint32_t> truncation_;
  bool unbounded_;
};

/// A subring sharing its ambient ring's representation; arithmetic is the
/// ambient arithmetic and membership adds the subring's constraints.
class Subring : public Ring {
 public:
  explicit Subring(RingPtr ambient) : ambient_(std::move(ambient)) {}

  virtual bool admits(const Value& a) const = 0;

  RingPtr ambient() const override { return ambient_; }
  const ScalarField& base_field() const override { return ambient_->base_field(); }
  Value zero() const override { return ambient_->zero(); }
  Value one() const override { return ambient_->one(); }
  Value from_scalar(const Scalar& s) const override { return ambient_->from_scalar(s); }
  Value add(const Value& a, const Value& b) const override { return ambient_->add(a, b); }
  Value neg(const Value& a) const override { return ambient_->neg(a); }
  Value mul(const Value& a, const Value& b) const override { return ambient_->mul(a, b); }
  Value scale(const Scalar& s, const Value& a) const override { return ambient_->scale(s, a); }
  bool equal(const Value& a, const Value& b) const override { return ambient_->equal(a, b); }
  bool is_zero(const Value& a) const override { return ambient_->is_zero(a); }
  Value normalize(const Value& a) const override { return ambient_->normalize(a); }
  bool contains(const Value& a) const override { return ambient_->contains(a) && admits(a); }
  std::string render(const Value& a) const override { return ambient_->render(a); }
  bool is_regular(const Value& a) const override { return ambient_->is_regular(a); }
  std::optional<Value> inverse(const Value& a) const override;
  std::optional<Value> divide(const Value& a, const Value& d) const override;
  CenterDescription center() const override;

 protected:
  std::optional<Value> symbol(std::string_view name) const override;
  std::optional<Value> call(std::string_view name, std::span<const Expr> args) const override;
  std::optional<Value> tuple(std::span<const Expr> items) const override;
  std::optional<Value> bracket(std::span<const Expr> items) const override;

  RingPtr ambient_;
};

/// Subring of Q[x] cut out by a Constraint (e.g. Z+xQ[x]).
class MixedRing final : public Subring {
 public:
  explicit MixedRing(Constraint c);

  const Constraint& constraint() const { return constraint_; }
  bool admits(const Value& a) const override { return constraint_.admits(a.as<Poly>()); }

  RingKind kind() const override { return RingKind::Mixed; }
  std::string descriptor() const override { return constraint_.name(); }
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  bool is_commutative() const override { return true; }
  std::optional<bool> is_prime() const override { return true; }
  CenterDescription center() const override;

 private:
  Constraint constraint_;
};

class MatrixRing final : public Ring {
 public:
  MatrixRing(RingPtr base, std::size_t n);

  const RingPtr& base() const { return base_; }
  std::size_t size() const { return n_; }
  Value unit(std::size_t i, std::size_t j) const;
  Value scalar_matrix(const Value& c) const;
  Value diag(const std::vector<Value>& d) const;
  /// Determinant; requires a commutative base.
  Value det(const Value& a) const;

  RingKind kind() const override { return RingKind::Matrix; }
  std::string descriptor() const override;
  const ScalarField& base_field() const override { return base_->base_field(); }
  Value zero() const override;
  Value one() const override;
  Value from_scalar(const Scalar& s) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value scale(const Scalar& s, const Value& a) const override;
  bool equal(const Value& a, const Value& b) const override;
  Value normalize(const Value& a) const override;
  bool contains(const Value& a) const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  std::string render(const Value& a) const override;
  bool is_commutative() const override { return n_ == 1 && base_->is_commutative(); }
  std::optional<bool> is_prime() const override { return base_->is_prime(); }
  std::optional<std::size_t> dimension() const override;
  std::vector<Scalar> coords(const Value& a) const override;
  Value from_coords(std::span<const Scalar> c) const override;
  bool is_regular(const Value& a) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::optional<Value> divide(const Value& a, const Value& d) const override;
  CenterDescription center() const override;

 protected:
  std::optional<Value> symbol(std::string_view name) const override;
  std::optional<Value> call(std::string_view name, std::span<const Expr> args) const override;
  std::optional<Value> bracket(std::span<const Expr> items) const override;

 private:
  std::optional<Value> adjugate_inverse(const Value& a) const;
  Value minor(const Value& a, std::size_t row, std::size_t col) const;

  RingPtr base_;
  std::size_t n_;
};

/// Subring of M_k(Q[x]) whose (i,j) entries satisfy constraint (i,j).
class ConstrainedMatrixRing final : public Subring {
 public:
  ConstrainedMatrixRing(std::size_t k, std::vector<Constraint> constraints);

  std::size_t size() const { return k_; }
  const Constraint& constraint(std::size_t i, std::size_t j) const { return constraints_[i * k_ + j]; }
  const MatrixRing& matrices() const;
  bool admits(const Value& a) const override;

  RingKind kind() const override { return RingKind::ConstrainedMatrix; }
  std::string descriptor() const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  bool is_commutative() const override { return false; }

 private:
  std::size_t k_;
  std::vector<Constraint> constraints_;
};

class ProductRing final : public Ring {
 public:
  /// `idempotents` overrides the standard unit tuples; they are validated.
  ProductRing(std::vector<RingPtr> components, std::optional<std::vector<Value>> idempotents);

  const std::vector<RingPtr>& components() const { return components_; }
  std::size_t arity() const { return components_.size(); }
  const std::vector<Value>& idempotents() const { return idempotents_; }
  /// Element with `v` in slot i and 0 elsewhere.
  Value inject(std::size_t i, const Value& v) const;

  RingKind kind() const override { return RingKind::Product; }
  std::string descriptor() const override;
  const ScalarField& base_field() const override { return components_.front()->base_field(); }
  Value zero() const override;
  Value one() const override;
  Value from_scalar(const Scalar& s) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value scale(const Scalar& s, const Value& a) const override;
  bool equal(const Value& a, const Value& b) const override;
  Value normalize(const Value& a) const override;
  bool contains(const Value& a) const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  std::string render(const Value& a) const override;
  bool is_commutative() const override;
  std::optional<bool> is_prime() const override;
  std::optional<std::size_t> dimension() const override;
  std::vector<Scalar> coords(const Value& a) const override;
  Value from_coords(std::span<const Scalar> c) const override;
  bool is_regular(const Value& a) const override;
  std::optional<Value> inverse(const Value& a) const override;
  CenterDescription center() const override;

 protected:
  std::optional<Value> symbol(std::string_view name) const override;
  std::optional<Value> call(std::string_view name, std::span<const Expr> args) const override;
  std::optional<Value> tuple(std::span<const Expr> items) const override;

 private:
  std::vector<RingPtr> components_;
  std::vector<Value> idempotents_;
};

/// R[u^{-1}] for a central regular u; elements are num * u^{-exp}.
class LocalizationRing final : public Ring {
 public:
  LocalizationRing(RingPtr base, Value u);

  const RingPtr& base() const { return base_; }
  const Value& element() const { return u_; }
  /// r ↦ r/1.
  Value embed(const Value& r) const { return Frac{r, 0}; }
  /// Base value equal to a, if a lies in the image of the embedding.
  std::optional<Value> restrict(const Value& a) const;

  RingKind kind() const override { return RingKind::Localization; }
  std::string descriptor() const override;
  const ScalarField& base_field() const override { return base_->base_field(); }
  Value zero() const override { return embed(base_->zero()); }
  Value one() const override { return embed(base_->one()); }
  Value from_scalar(const Scalar& s) const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value scale(const Scalar& s, const Value& a) const override;
  bool equal(const Value& a, const Value& b) const override;
  Value normalize(const Value& a) const override;
  bool contains(const Value& a) const override;
  std::vector<Value> generators() const override;
  Value random(Rng& rng) const override;
  std::string render(const Value& a) const override;
  bool is_commutative() const override { return base_->is_commutative(); }
  std::optional<bool> is_prime() const override { return base_->is_prime(); }
  bool is_regular(const Value& a) const override;
  std::optional<Value> inverse(const Value& a) const override;
  CenterDescription center() const override;

 protected:
  std::optional<Value> symbol(std::string_view name) const override;
  std::optional<Value> call(std::string_view name, std::span<const Expr> args) const override;
  std::optional<Value> tuple(std::span<const Expr> items) const override;
  std::optional<Value> bracket(std::span<const Expr> items) const override;

 private:
  Value u_power(std::uint32_t k) const;

  RingPtr base_;
  Value u_;
};

// ---------------------------------------------------------------------------
// Construction.

struct RingSpec {
  RingKind kind = RingKind::Field;
  ScalarField field = ScalarField::rationals();
  // polynomial
  std::vector<std::string> variables;
  std::vector<std::uint32_t> truncation;
  bool unbounded_family = false;
  // mixed
  std::string constraint;
  // matrix / constrained-matrix
  std::size_t size = 0;
  std::vector<std::string> constraints;  // row-major, size*size names
  // matrix / localization: base ring; product: components
  std::vector<RingSpec> parts;
  std::vector<RingPtr> prebuilt;  // used instead of `parts` when nonempty
  std::optional<std::vector<std::string>> idempotents;
  std::string element;  // localization: literal for u
};

/// Throws ClosureViolation, BadIdempotents, UnsupportedKind.
RingPtr ring_make(const RingSpec& spec);

RingPtr make_field(ScalarField field);
RingPtr make_polynomial(ScalarField field, std::vector<std::string> vars,
                        std::vector<std::uint32_t> truncation = {}, bool unbounded_family = false);
RingPtr make_mixed(Constraint c);
RingPtr make_matrix(RingPtr base, std::size_t n);
RingPtr make_constrained_matrix(std::size_t k, const std::vector<Constraint>& constraints);
RingPtr make_product(std::vector<RingPtr> components,
                     std::optional<std::vector<Value>> idempotents = std::nullopt);
/// Throws NotCentral, NotRegular.
RingPtr localize(const RingPtr& ring, const Value& u);

/// Membership of an ambient element in a subring (NotASubringOf otherwise).
bool membership(const Value& a, const Ring& ambient, const Ring& sub);

std::vector<Value> center_basis(const Ring& ring);

/// `y1^2*y3`-style monomial text for an exponent vector.
std::string render_monomial(const std::vector<std::string>& vars, const Exponents& e);
/// Coefficient-times-thing rendering shared by polynomial-like printers.
void append_term(std::string& out, const Scalar& c, const std::string& thing, bool first);

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_CATALOG_HPP
