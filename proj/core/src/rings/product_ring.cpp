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

namespace {

const std::vector<Value>& parts(const Value& v) { return v.as<Tuple>().parts; }

}  // namespace

ProductRing::ProductRing(std::vector<RingPtr> components, std::optional<std::vector<Value>> idempotents)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(Errc::UnsupportedKind, "product needs at least one component");
  for (const RingPtr& c : components_) {
    if (!(c->base_field() == components_.front()->base_field())) {
      throw Error(Errc::UnsupportedKind, "product components must share a base field");
    }
  }
  for (std::size_t i = 0; i < components_.size(); ++i) idempotents_.push_back(inject(i, components_[i]->one()));
  if (!idempotents) return;

  const auto& e = *idempotents;
  if (e.empty()) throw Error(Errc::BadIdempotents, "empty idempotent list");
  Value sum = zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!contains(e[i])) throw Error(Errc::BadIdempotents, "e" + std::to_string(i + 1) + " is not in the ring");
    for (std::size_t j = 0; j < e.size(); ++j) {
      const Value p = mul(e[i], e[j]);
      if (i == j ? !equal(p, e[i]) : !is_zero(p)) {
        throw Error(Errc::BadIdempotents, "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " +
                                              render(p));
      }
    }
    for (const Value& g : generators()) {
      if (!equal(mul(e[i], g), mul(g, e[i]))) {
        throw Error(Errc::BadIdempotents, "e" + std::to_string(i + 1) + " is not central");
      }
    }
    sum = add(sum, e[i]);
  }
  if (!equal(sum, one())) throw Error(Errc::BadIdempotents, "idempotents sum to " + render(sum));
  idempotents_ = e;
}

Value ProductRing::inject(std::size_t i, const Value& v) const {
  Tuple t;
  for (std::size_t k = 0; k < components_.size(); ++k) t.parts.push_back(k == i ? v : components_[k]->zero());
  return t;
}

std::string ProductRing::descriptor() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += " (+) ";
    const std::string d = components_[i]->descriptor();
    out += components_[i]->kind() == RingKind::Product ? "(" + d + ")" : d;
  }
  return components_.size() == 1 ? "(" + out + ")" : out;
}

Value ProductRing::zero() const {
  Tuple t;
  for (const RingPtr& c : components_) t.parts.push_back(c->zero());
  return t;
}

Value ProductRing::one() const {
  Tuple t;
  for (const RingPtr& c : components_) t.parts.push_back(c->one());
  return t;
}

Value ProductRing::from_scalar(const Scalar& s) const {
  Tuple t;
  for (const RingPtr& c : components_) t.parts.push_back(c->from_scalar(s));
  return t;
}

Value ProductRing::add(const Value& a, const Value& b) const {
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) t.parts.push_back(components_[i]->add(parts(a)[i], parts(b)[i]));
  return t;
}

Value ProductRing::neg(const Value& a) const {
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) t.parts.push_back(components_[i]->neg(parts(a)[i]));
  return t;
}

Value ProductRing::mul(const Value& a, const Value& b) const {
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) t.parts.push_back(components_[i]->mul(parts(a)[i], parts(b)[i]));
  return t;
}

Value ProductRing::scale(const Scalar& s, const Value& a) const {
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) t.parts.push_back(components_[i]->scale(s, parts(a)[i]));
  return t;
}

bool ProductRing::equal(const Value& a, const Value& b) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->equal(parts(a)[i], parts(b)[i])) return false;
  }
  return true;
}

Value ProductRing::normalize(const Value& a) const {
  if (parts(a).size() != components_.size()) throw Error(Errc::RingMismatch, "tuple arity differs from " + descriptor());
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) t.parts.push_back(components_[i]->normalize(parts(a)[i]));
  return t;
}

bool ProductRing::contains(const Value& a) const {
  if (!a.holds<Tuple>() || parts(a).size() != components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->contains(parts(a)[i])) return false;
  }
  return true;
}

std::vector<Value> ProductRing::generators() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    out.push_back(inject(i, components_[i]->one()));
    for (const Value& g : components_[i]->generators()) {
      if (!components_[i]->equal(g, components_[i]->one())) out.push_back(inject(i, g));
    }
  }
  return out;
}

Value ProductRing::random(Rng& rng) const {
  Tuple t;
  for (const RingPtr& c : components_) t.parts.push_back(c->random(rng));
  return t;
}

std::string ProductRing::render(const Value& a) const {
  std::string out = components_.size() == 1 ? "tuple(" : "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i]->render(parts(a)[i]);
  }
  return out + ")";
}

bool ProductRing::is_commutative() const {
  for (const RingPtr& c : components_) {
    if (!c->is_commutative()) return false;
  }
  return true;
}

std::optional<bool> ProductRing::is_prime() const {
  if (components_.size() == 1) return components_.front()->is_prime();
  return false;
}

std::optional<std::size_t> ProductRing::dimension() const {
  std::size_t total = 0;
  for (const RingPtr& c : components_) {
    auto d = c->dimension();
    if (!d) return std::nullopt;
    total += *d;
  }
  return total;
}

std::vector<Scalar> ProductRing::coords(const Value& a) const {
  if (!dimension()) return Ring::coords(a);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto c = components_[i]->coords(parts(a)[i]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Value ProductRing::from_coords(std::span<const Scalar> c) const {
  if (!dimension()) return Ring::from_coords(c);
  Tuple t;
  std::size_t offset = 0;
  for (const RingPtr& comp : components_) {
    const std::size_t d = *comp->dimension();
    t.parts.push_back(comp->from_coords(c.subspan(offset, d)));
    offset += d;
  }
  return t;
}

bool ProductRing::is_regular(const Value& a) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->is_regular(parts(a)[i])) return false;
  }
  return true;
}

std::optional<Value> ProductRing::inverse(const Value& a) const {
  Tuple t;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto inv = components_[i]->inverse(parts(a)[i]);
    if (!inv) return std::nullopt;
    t.parts.push_back(*inv);
  }
  return Value(std::move(t));
}

CenterDescription ProductRing::center() const {
  CenterDescription out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    CenterDescription c = components_[i]->center();
    out.linear_span = out.linear_span && c.linear_span;
    for (const Value& z : c.elements) out.elements.push_back(inject(i, z));
  }
  return out;
}

std::optional<Value> ProductRing::symbol(std::string_view name) const {
  if (name.size() >= 2 && name[0] == 'e') {
    std::size_t index = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      index = index * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (index >= 1 && index <= idempotents_.size()) return idempotents_[index - 1];
  }
  return std::nullopt;
}

std::optional<Value> ProductRing::call(std::string_view name, std::span<const Expr> args) const {
  if (name == "tuple") return tuple(args);
  return std::nullopt;
}

std::optional<Value> ProductRing::tuple(std::span<const Expr> items) const {
  if (items.size() != components_.size()) {
    throw Error(Errc::BadLiteral, "expected a tuple of " + std::to_string(components_.size()) + " entries");
  }
  Tuple t;
  for (std::size_t i = 0; i < items.size(); ++i) t.parts.push_back(components_[i]->evaluate_unchecked(items[i]));
  return Value(std::move(t));
}

// ---------------------------------------------------------------------------
// LocalizationRing

namespace {

constexpr std::uint32_t kLiftBound = 16;

const Frac& as_frac(const Value& v) { return v.as<Frac>(); }

Expr rebuild(Expr::Kind kind, std::string_view name, std::span<const Expr> args) {
  Expr e;
  e.kind = kind;
  e.name = std::string(name);
  e.args.assign(args.begin(), args.end());
  return e;
}

}  // namespace

LocalizationRing::LocalizationRing(RingPtr base, Value u) : base_(std::move(base)), u_(std::move(u)) {}

Value LocalizationRing::u_power(std::uint32_t k) const { return base_->pow(u_, k); }

std::string LocalizationRing::descriptor() const {
  return base_->descriptor() + "[(" + base_->render(u_) + ")^-1]";
}

std::optional<Value> LocalizationRing::restrict(const Value& a) const {
  const Value n = normalize(a);
  if (as_frac(n).exp == 0) return *as_frac(n).num;
  return std::nullopt;
}

Value LocalizationRing::from_scalar(const Scalar& s) const { return normalize(embed(base_->from_scalar(s))); }

Value LocalizationRing::add(const Value& a, const Value& b) const {
  const Frac& x = as_frac(a);
  const Frac& y = as_frac(b);
  Value num = base_->add(base_->mul(*x.num, u_power(y.exp)), base_->mul(*y.num, u_power(x.exp)));
  return normalize(Frac{num, x.exp + y.exp});
}

Value LocalizationRing::neg(const Value& a) const { return Frac{base_->neg(*as_frac(a).num), as_frac(a).exp}; }

Value LocalizationRing::mul(const Value& a, const Value& b) const {
  const Frac& x = as_frac(a);
  const Frac& y = as_frac(b);
  return normalize(Frac{base_->mul(*x.num, *y.num), x.exp + y.exp});
}

Value LocalizationRing::scale(const Scalar& s, const Value& a) const {
  return normalize(Frac{base_->scale(s, *as_frac(a).num), as_frac(a).exp});
}

bool LocalizationRing::equal(const Value& a, const Value& b) const {
  const Frac& x = as_frac(a);
  const Frac& y = as_frac(b);
  return base_->equal(base_->mul(*x.num, u_power(y.exp)), base_->mul(*y.num, u_power(x.exp)));
}

Value LocalizationRing::normalize(const Value& a) const {
  Value num = base_->normalize(*as_frac(a).num);
  std::uint32_t exp = as_frac(a).exp;
  if (base_->is_zero(num)) return Frac{base_->zero(), 0};
  // A numerator outside the base (e.g. from a scalar 1/2) is cleared by powers of u.
  for (std::uint32_t j = 0; j < kLiftBound && !base_->contains(num); ++j) {
    num = base_->mul(num, u_);
    ++exp;
  }
  while (exp > 0) {
    auto q = base_->divide(num, u_);
    if (!q || !base_->contains(*q)) break;
    num = *q;
    --exp;
  }
  return Frac{num, exp};
}

bool LocalizationRing::contains(const Value& a) const {
  return a.holds<Frac>() && base_->contains(*as_frac(a).num);
}

std::vector<Value> LocalizationRing::generators() const {
  std::vector<Value> out;
  for (const Value& g : base_->generators()) out.push_back(embed(g));
  out.push_back(Frac{base_->one(), 1});
  return out;
}

Value LocalizationRing::random(Rng& rng) const {
  const Value num = base_->random(rng);
  const auto exp = static_cast<std::uint32_t>(rng.uniform(0, 2));
  return normalize(Frac{num, exp});
}

std::string LocalizationRing::render(const Value& a) const {
  const Frac& f = as_frac(a);
  if (f.exp == 0) return base_->render(*f.num);
  return "frac(" + base_->render(*f.num) + ", " + std::to_string(f.exp) + ")";
}

bool LocalizationRing::is_regular(const Value& a) const { return base_->is_regular(*as_frac(a).num); }

std::optional<Value> LocalizationRing::inverse(const Value& a) const {
  const Frac& f = as_frac(a);
  for (std::uint32_t j = 0; j <= kLiftBound; ++j) {
    auto c = base_->divide(u_power(j + f.exp), *f.num);
    if (!c || !base_->contains(*c)) continue;
    Value inv = normalize(Frac{*c, j});
    if (equal(mul(inv, a), one()) && equal(mul(a, inv), one())) return inv;
  }
  return std::nullopt;
}

CenterDescription LocalizationRing::center() const {
  CenterDescription base_center = base_->center();
  CenterDescription out{{}, false};
  for (const Value& z : base_center.elements) out.elements.push_back(embed(z));
  out.elements.push_back(Frac{base_->one(), 1});
  return out;
}

std::optional<Value> LocalizationRing::symbol(std::string_view name) const {
  return embed(base_->evaluate_unchecked(rebuild(Expr::Kind::Symbol, name, {})));
}

std::optional<Value> LocalizationRing::call(std::string_view name, std::span<const Expr> args) const {
  if (name == "frac") {
    if (args.size() != 2 || args[1].kind != Expr::Kind::Number || args[1].number < 0 ||
        !args[1].number.fits_uint_p()) {
      throw Error(Errc::BadLiteral, "frac expects (numerator, nonnegative integer exponent)");
    }
    return Value(Frac{base_->evaluate_unchecked(args[0]), static_cast<std::uint32_t>(args[1].number.get_ui())});
  }
  return embed(base_->evaluate_unchecked(rebuild(Expr::Kind::Call, name, args)));
}

std::optional<Value> LocalizationRing::tuple(std::span<const Expr> items) const {
  return embed(base_->evaluate_unchecked(rebuild(Expr::Kind::Tuple, "", items)));
}

std::optional<Value> LocalizationRing::bracket(std::span<const Expr> items) const {
  return embed(base_->evaluate_unchecked(rebuild(Expr::Kind::Bracket, "", items)));
}

}  // namespace skewlab::rings
