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
#include "skewlab/rings/detail.hpp"

namespace skewlab::rings {

// ---------------------------------------------------------------------------
// Constraint

Constraint Constraint::parse(std::string_view name) {
  static const std::pair<std::string_view, Constraint> table[] = {
      {"0", {ConstPart::Zero, false}},
      {"Z", {ConstPart::Integer, false}},
      {"Z[1/2]", {ConstPart::Dyadic, false}},
      {"Q", {ConstPart::Rational, false}},
      {"xQ[x]", {ConstPart::Zero, true}},
      {"Z+xQ[x]", {ConstPart::Integer, true}},
      {"Z[1/2]+xQ[x]", {ConstPart::Dyadic, true}},
      {"Q[x]", {ConstPart::Rational, true}},
  };
  for (const auto& [text, c] : table) {
    if (text == name) return c;
  }
  throw Error(Errc::UnsupportedKind, "unknown entry constraint '" + std::string(name) + "'");
}

std::string Constraint::name() const {
  switch (constant) {
    case ConstPart::Zero: return tail ? "xQ[x]" : "0";
    case ConstPart::Integer: return tail ? "Z+xQ[x]" : "Z";
    case ConstPart::Dyadic: return tail ? "Z[1/2]+xQ[x]" : "Z[1/2]";
    case ConstPart::Rational: return tail ? "Q[x]" : "Q";
  }
  return "?";
}

bool Constraint::admits(const Poly& p) const {
  for (const auto& [e, c] : p.terms) {
    if (c.kind() == Scalar::Kind::ModP || c.kind() == Scalar::Kind::Gaussian) return false;
    const bool is_constant = e.size() == 1 && e[0] == 0;
    if (!is_constant) {
      if (!tail) return false;
      continue;
    }
    switch (constant) {
      case ConstPart::Zero: return false;
      case ConstPart::Integer:
        if (!c.is_integer()) return false;
        break;
      case ConstPart::Dyadic:
        if (!c.is_dyadic()) return false;
        break;
      case ConstPart::Rational: break;
    }
  }
  return true;
}

bool Constraint::includes(const Constraint& other) const {
  return static_cast<int>(other.constant) <= static_cast<int>(constant) && (!other.tail || tail);
}

Constraint operator*(const Constraint& a, const Constraint& b) {
  const bool zero_a = a.constant == ConstPart::Zero && !a.tail;
  const bool zero_b = b.constant == ConstPart::Zero && !b.tail;
  if (zero_a || zero_b) return {ConstPart::Zero, false};
  Constraint out;
  if (a.constant == ConstPart::Zero || b.constant == ConstPart::Zero) {
    out.constant = ConstPart::Zero;
  } else {
    out.constant = std::max(a.constant, b.constant);
  }
  out.tail = a.tail || b.tail;
  return out;
}

// ---------------------------------------------------------------------------
// Subring

namespace {

Expr rebuild(Expr::Kind kind, std::string_view name, std::span<const Expr> args) {
  Expr e;
  e.kind = kind;
  e.name = std::string(name);
  e.args.assign(args.begin(), args.end());
  return e;
}

}  // namespace

std::optional<Value> Subring::inverse(const Value& a) const {
  auto inv = ambient_->inverse(a);
  if (inv && admits(*inv)) return inv;
  return std::nullopt;
}

std::optional<Value> Subring::divide(const Value& a, const Value& d) const {
  auto q = ambient_->divide(a, d);
  if (q && admits(*q)) return q;
  return std::nullopt;
}

CenterDescription Subring::center() const {
  throw Error(Errc::Unsupported, "no center computation for " + descriptor());
}

std::optional<Value> Subring::symbol(std::string_view name) const {
  return ambient_->evaluate_unchecked(rebuild(Expr::Kind::Symbol, name, {}));
}

std::optional<Value> Subring::call(std::string_view name, std::span<const Expr> args) const {
  return ambient_->evaluate_unchecked(rebuild(Expr::Kind::Call, name, args));
}

std::optional<Value> Subring::tuple(std::span<const Expr> items) const {
  return ambient_->evaluate_unchecked(rebuild(Expr::Kind::Tuple, "", items));
}

std::optional<Value> Subring::bracket(std::span<const Expr> items) const {
  return ambient_->evaluate_unchecked(rebuild(Expr::Kind::Bracket, "", items));
}

namespace {

RingPtr rational_line() { return make_polynomial(ScalarField::rationals(), {"x"}); }

Scalar random_constant(ConstPart part, Rng& rng) {
  switch (part) {
    case ConstPart::Zero: return Scalar(0);
    case ConstPart::Integer: return Scalar(static_cast<long>(rng.coefficient()));
    case ConstPart::Dyadic:
      return Scalar::rational(mpq_class(rng.coefficient(), 1L << rng.uniform(0, 2)));
    case ConstPart::Rational:
      return Scalar::rational(mpq_class(rng.coefficient(), rng.uniform(1, 3)));
  }
  return Scalar(0);
}

// Sample of a constrained entry: constant part plus up to two tail terms.
Value random_entry(const PolyRing& line, const Constraint& c, Rng& rng) {
  Value out = line.from_scalar(random_constant(c.constant, rng));
  if (c.tail) {
    for (std::uint32_t d = 1; d <= 2; ++d) {
      if (rng.coin()) {
        out = line.add(out, line.monomial({d}, Scalar::rational(mpq_class(rng.coefficient(), rng.uniform(1, 3)))));
      }
    }
  }
  return out;
}

// Representative elements c·thing whose sums, products and Q-multiples of
// tails exhaust the constraint set.
std::vector<Scalar> constant_representatives(ConstPart part) {
  switch (part) {
    case ConstPart::Zero: return {};
    case ConstPart::Integer: return {Scalar(1)};
    case ConstPart::Dyadic: return {Scalar::rational(mpq_class(1, 2))};
    case ConstPart::Rational: return {Scalar::rational(mpq_class(1, 2)), Scalar::rational(mpq_class(1, 3))};
  }
  return {};
}

std::vector<Value> entry_representatives(const PolyRing& line, const Constraint& c) {
  std::vector<Value> out;
  for (const Scalar& s : constant_representatives(c.constant)) out.push_back(line.from_scalar(s));
  if (c.tail) {
    for (const Scalar& s : {Scalar(1), Scalar::rational(mpq_class(1, 2)), Scalar::rational(mpq_class(1, 3))}) {
      out.push_back(line.monomial({1}, s));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MixedRing

MixedRing::MixedRing(Constraint c) : Subring(rational_line()), constraint_(c) {
  if (!c.has_one()) throw Error(Errc::UnsupportedKind, c.name() + " is not a unital ring");
}

std::vector<Value> MixedRing::generators() const {
  const auto& line = static_cast<const PolyRing&>(*ambient_);
  std::vector<Value> out{one()};
  for (const Value& v : entry_representatives(line, constraint_)) {
    if (!equal(v, one())) out.push_back(v);
  }
  return out;
}

Value MixedRing::random(Rng& rng) const {
  return random_entry(static_cast<const PolyRing&>(*ambient_), constraint_, rng);
}

CenterDescription MixedRing::center() const { return {generators(), false}; }

// ---------------------------------------------------------------------------
// ConstrainedMatrixRing

ConstrainedMatrixRing::ConstrainedMatrixRing(std::size_t k, std::vector<Constraint> constraints)
    : Subring(make_matrix(rational_line(), k)), k_(k), constraints_(std::move(constraints)) {
  if (constraints_.size() != k_ * k_) {
    throw Error(Errc::UnsupportedKind, "expected " + std::to_string(k_ * k_) + " entry constraints");
  }
}

const MatrixRing& ConstrainedMatrixRing::matrices() const { return static_cast<const MatrixRing&>(*ambient_); }

bool ConstrainedMatrixRing::admits(const Value& a) const {
  const Mat& m = a.as<Mat>();
  for (std::size_t k = 0; k < k_ * k_; ++k) {
    if (!constraints_[k].admits(m.entries[k].as<Poly>())) return false;
  }
  return true;
}

std::string ConstrainedMatrixRing::descriptor() const {
  std::string out = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < k_; ++j) out += (j ? ", " : "") + constraint(i, j).name();
    out += "]";
  }
  return out + "]";
}

std::vector<Value> ConstrainedMatrixRing::generators() const {
  const MatrixRing& mats = matrices();
  const auto& line = static_cast<const PolyRing&>(*mats.base());
  std::vector<Value> out{one()};
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      for (const Value& v : entry_representatives(line, constraint(i, j))) {
        Mat m = mats.zero().as<Mat>();
        m.entries[i * k_ + j] = v;
        out.emplace_back(std::move(m));
      }
    }
  }
  return out;
}

Value ConstrainedMatrixRing::random(Rng& rng) const {
  const auto& line = static_cast<const PolyRing&>(*matrices().base());
  Mat m{k_, {}};
  for (std::size_t k = 0; k < k_ * k_; ++k) m.entries.push_back(random_entry(line, constraints_[k], rng));
  return m;
}

}  // namespace skewlab::rings
