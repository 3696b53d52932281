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

#include "skewlab/rings/ring.hpp"

#include <utility>

#include "skewlab/error.hpp"

namespace skewlab::rings {

std::string_view ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Field: return "field";
    case RingKind::Polynomial: return "polynomial";
    case RingKind::Mixed: return "mixed";
    case RingKind::Matrix: return "matrix";
    case RingKind::ConstrainedMatrix: return "constrained-matrix";
    case RingKind::Product: return "product";
    case RingKind::Localization: return "localization";
  }
  return "?";
}

Value conjugate_scalars(const Value& v) {
  return std::visit(
      [](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return x.conj();
        } else if constexpr (std::is_same_v<T, Poly>) {
          Poly p;
          for (const auto& [mono, c] : x.terms) p.terms.emplace(mono, c.conj());
          return p;
        } else if constexpr (std::is_same_v<T, Mat>) {
          Mat m{x.n, {}};
          m.entries.reserve(x.entries.size());
          for (const Value& e : x.entries) m.entries.push_back(conjugate_scalars(e));
          return m;
        } else if constexpr (std::is_same_v<T, Tuple>) {
          Tuple t;
          for (const Value& e : x.parts) t.parts.push_back(conjugate_scalars(e));
          return t;
        } else {
          return Frac{conjugate_scalars(*x.num), x.exp};
        }
      },
      v.data);
}

Value Ring::pow(const Value& a, std::uint32_t e) const {
  Value result = one();
  Value base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

namespace {

Scalar numeric_constant(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return Scalar::integer(e.number);
    case Expr::Kind::Imag: return Scalar::gaussian(mpq_class(0), mpq_class(e.number));
    case Expr::Kind::Neg: return -numeric_constant(e.args[0]);
    case Expr::Kind::Add: return numeric_constant(e.args[0]) + numeric_constant(e.args[1]);
    case Expr::Kind::Sub: return numeric_constant(e.args[0]) - numeric_constant(e.args[1]);
    case Expr::Kind::Mul: return numeric_constant(e.args[0]) * numeric_constant(e.args[1]);
    case Expr::Kind::Div: {
      Scalar d = numeric_constant(e.args[1]);
      if (d.is_zero()) throw Error(Errc::BadLiteral, "division by zero at position " + std::to_string(e.pos));
      return numeric_constant(e.args[0]) / d;
    }
    default:
      throw Error(Errc::BadLiteral, "divisor must be a numeric constant (position " + std::to_string(e.pos) + ")");
  }
}

}  // namespace

Value Ring::evaluate_unchecked(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Number: return from_scalar(Scalar::integer(e.number));
    case Expr::Kind::Imag: {
      if (base_field().kind() != ScalarField::Kind::Gaussian) {
        throw Error(Errc::BadLiteral, "imaginary unit used over " + base_field().name());
      }
      return from_scalar(Scalar::gaussian(mpq_class(0), mpq_class(e.number)));
    }
    case Expr::Kind::Symbol: {
      if (auto v = symbol(e.name)) return *std::move(v);
      throw Error(Errc::BadLiteral, "unknown identifier '" + e.name + "' in " + descriptor());
    }
    case Expr::Kind::Call: {
      if (auto v = call(e.name, e.args)) return *std::move(v);
      throw Error(Errc::BadLiteral, "unknown function '" + e.name + "' in " + descriptor());
    }
    case Expr::Kind::Tuple: {
      if (auto v = tuple(e.args)) return *std::move(v);
      throw Error(Errc::BadLiteral, "tuple literal not valid in " + descriptor());
    }
    case Expr::Kind::Bracket: {
      if (auto v = bracket(e.args)) return *std::move(v);
      throw Error(Errc::BadLiteral, "bracket literal not valid in " + descriptor());
    }
    case Expr::Kind::Neg: return neg(evaluate_unchecked(e.args[0]));
    case Expr::Kind::Add: return add(evaluate_unchecked(e.args[0]), evaluate_unchecked(e.args[1]));
    case Expr::Kind::Sub: return sub(evaluate_unchecked(e.args[0]), evaluate_unchecked(e.args[1]));
    case Expr::Kind::Mul: return mul(evaluate_unchecked(e.args[0]), evaluate_unchecked(e.args[1]));
    case Expr::Kind::Div: {
      Scalar d = numeric_constant(e.args[1]);
      if (d.is_zero()) throw Error(Errc::BadLiteral, "division by zero");
      return scale(base_field().embed(d).inverse(), evaluate_unchecked(e.args[0]));
    }
    case Expr::Kind::Pow: return pow(evaluate_unchecked(e.args[0]), e.exponent);
  }
  throw Error(Errc::BadLiteral, "malformed literal");
}

Value Ring::evaluate(const Expr& e) const {
  Value v;
  try {
    v = normalize(evaluate_unchecked(e));
  } catch (const Error& err) {
    if (err.code() == Errc::BadLiteral) throw;
    throw Error(Errc::BadLiteral, err.what());
  }
  if (!contains(v)) {
    throw Error(Errc::BadLiteral, render(v) + " is not an element of " + descriptor());
  }
  return v;
}

Value Ring::parse(std::string_view text) const { return evaluate(parse_literal(text)); }

std::optional<Value> Ring::symbol(std::string_view /*name*/) const { return std::nullopt; }
std::optional<Value> Ring::call(std::string_view /*name*/, std::span<const Expr> /*args*/) const {
  return std::nullopt;
}
std::optional<Value> Ring::tuple(std::span<const Expr> /*items*/) const { return std::nullopt; }
std::optional<Value> Ring::bracket(std::span<const Expr> /*items*/) const { return std::nullopt; }

std::vector<Scalar> Ring::coords(const Value& /*a*/) const {
  throw Error(Errc::Unsupported, descriptor() + " has no finite basis");
}

Value Ring::from_coords(std::span<const Scalar> /*c*/) const {
  throw Error(Errc::Unsupported, descriptor() + " has no finite basis");
}

Scalar Ring::coord_zero() const { return base_field().prime_field().zero(); }

std::vector<Value> Ring::basis() const {
  const auto dim = dimension();
  if (!dim) throw Error(Errc::Unsupported, descriptor() + " has no finite basis");
  std::vector<Value> out;
  out.reserve(*dim);
  const Scalar zero = coord_zero();
  const Scalar one = unit_like(zero);
  for (std::size_t k = 0; k < *dim; ++k) {
    std::vector<Scalar> c(*dim, zero);
    c[k] = one;
    out.push_back(from_coords(c));
  }
  return out;
}

std::vector<ScalarVector> Ring::multiplication_columns(const Value& a, bool left) const {
  std::vector<ScalarVector> cols;
  for (const Value& b : basis()) cols.push_back(coords(left ? mul(a, b) : mul(b, a)));
  return cols;
}

bool Ring::is_regular(const Value& a) const {
  const auto dim = dimension();
  if (!dim) throw Error(Errc::Unsupported, "no regularity test for " + descriptor());
  for (bool left : {true, false}) {
    const auto cols = multiplication_columns(a, left);
    if (rank(ScalarMatrix::from_columns(*dim, cols, coord_zero())) != *dim) return false;
  }
  return true;
}

std::optional<Value> Ring::inverse(const Value& a) const {
  const auto dim = dimension();
  if (!dim) throw Error(Errc::Unsupported, "no inversion procedure for " + descriptor());
  const auto cols = multiplication_columns(a, true);
  const auto x = solve(ScalarMatrix::from_columns(*dim, cols, coord_zero()), coords(one()));
  if (!x) return std::nullopt;
  Value inv = from_coords(*x);
  if (!equal(mul(inv, a), one())) return std::nullopt;
  return inv;
}

std::optional<Value> Ring::divide(const Value& a, const Value& d) const {
  auto inv = inverse(d);
  if (!inv) return std::nullopt;
  return mul(a, *inv);
}

CenterDescription Ring::center() const {
  const auto dim = dimension();
  if (!dim) throw Error(Errc::Unsupported, "no center computation for " + descriptor());
  const std::vector<Value> gens = generators();
  const std::vector<Value> b = basis();
  const std::size_t rows = *dim * gens.size();
  ScalarMatrix m(rows, *dim, coord_zero());
  for (std::size_t k = 0; k < *dim; ++k) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto c = coords(sub(mul(b[k], gens[g]), mul(gens[g], b[k])));
      for (std::size_t r = 0; r < *dim; ++r) m.at(g * *dim + r, k) = c[r];
    }
  }
  CenterDescription out;
  for (const ScalarVector& v : nullspace(m)) out.elements.push_back(from_coords(v));
  return out;
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.descriptor() == b.descriptor(); }

RingElem::RingElem(RingPtr ring, Value value) : ring_(std::move(ring)), value_(ring_->normalize(value)) {}

namespace {
void require_same(const RingElem& a, const RingElem& b) {
  if (!same_ring(*a.ring(), *b.ring())) {
    throw Error(Errc::RingMismatch, a.ring()->descriptor() + " vs " + b.ring()->descriptor());
  }
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return {a.ring_, a.ring_->add(a.value_, b.value_)};
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return {a.ring_, a.ring_->sub(a.value_, b.value_)};
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return {a.ring_, a.ring_->mul(a.value_, b.value_)};
}

RingElem RingElem::operator-() const { return {ring_, ring_->neg(value_)}; }

bool operator==(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return a.ring_->equal(a.value_, b.value_);
}

}  // namespace skewlab::rings
