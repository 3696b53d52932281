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
#include <numeric>

#include "skewlab/error.hpp"
#include "skewlab/rings/catalog.hpp"
#include "skewlab/rings/detail.hpp"

namespace skewlab::rings {

namespace detail {

Scalar random_scalar(const ScalarField& field, Rng& rng) {
  switch (field.kind()) {
    case ScalarField::Kind::Rational:
      return Scalar::rational(mpq_class(rng.coefficient(), rng.uniform(1, 3)));
    case ScalarField::Kind::Gaussian: {
      mpq_class re(rng.coefficient(), rng.uniform(1, 3));
      mpq_class im(rng.coefficient(), rng.uniform(1, 3));
      re.canonicalize();
      im.canonicalize();
      return Scalar::gaussian(re, im);
    }
    case ScalarField::Kind::Prime:
      return field.embed(Scalar(static_cast<long>(rng.coefficient())));
  }
  return field.zero();
}

bool is_negative(const Scalar& s) {
  if (s.kind() == Scalar::Kind::ModP) return false;
  if (s.kind() == Scalar::Kind::Gaussian && s.im() != 0) return false;
  return s.re() < 0;
}

}  // namespace detail

std::string render_monomial(const std::vector<std::string>& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

void append_term(std::string& out, const Scalar& c, const std::string& thing, bool first) {
  const bool negative = detail::is_negative(c);
  const Scalar mag = negative ? -c : c;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (thing.empty()) {
    out += mag.is_compound() && !first ? "(" + mag.to_string() + ")" : mag.to_string();
  } else if (mag.is_one()) {
    out += thing;
  } else if (mag.is_compound()) {
    out += "(" + mag.to_string() + ")*" + thing;
  } else {
    out += mag.to_string() + "*" + thing;
  }
}

// ---------------------------------------------------------------------------
// FieldRing

Value FieldRing::add(const Value& a, const Value& b) const { return a.as<Scalar>() + b.as<Scalar>(); }
Value FieldRing::neg(const Value& a) const { return -a.as<Scalar>(); }
Value FieldRing::mul(const Value& a, const Value& b) const { return a.as<Scalar>() * b.as<Scalar>(); }
Value FieldRing::scale(const Scalar& s, const Value& a) const { return field_.embed(s) * a.as<Scalar>(); }
bool FieldRing::equal(const Value& a, const Value& b) const { return a.as<Scalar>() == b.as<Scalar>(); }

bool FieldRing::contains(const Value& a) const {
  return a.holds<Scalar>() && field_.contains(a.as<Scalar>());
}

std::vector<Value> FieldRing::generators() const {
  if (field_.kind() == ScalarField::Kind::Gaussian) return {Scalar::gaussian(0, 1)};
  return {field_.one()};
}

Value FieldRing::random(Rng& rng) const { return detail::random_scalar(field_, rng); }

std::string FieldRing::render(const Value& a) const { return a.as<Scalar>().to_string(); }

std::vector<Scalar> FieldRing::coords(const Value& a) const {
  std::vector<Scalar> out;
  field_.append_coords(a.as<Scalar>(), out);
  return out;
}

Value FieldRing::from_coords(std::span<const Scalar> c) const { return field_.from_coords(c.data()); }

bool FieldRing::is_regular(const Value& a) const { return !a.as<Scalar>().is_zero(); }

std::optional<Value> FieldRing::inverse(const Value& a) const {
  if (a.as<Scalar>().is_zero()) return std::nullopt;
  return Value(a.as<Scalar>().inverse());
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(ScalarField field, std::vector<std::string> vars, std::vector<std::uint32_t> truncation,
                   bool unbounded_family)
    : field_(field), vars_(std::move(vars)), truncation_(std::move(truncation)), unbounded_(unbounded_family) {
  if (vars_.empty()) throw Error(Errc::UnsupportedKind, "polynomial ring needs at least one variable");
  if (truncation_.empty()) truncation_.assign(vars_.size(), 0);
  if (truncation_.size() != vars_.size()) {
    throw Error(Errc::UnsupportedKind, "truncation list must match the variable list");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw Error(Errc::UnsupportedKind, "duplicate variable " + vars_[i]);
    }
  }
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

Value PolyRing::monomial(const Exponents& e, const Scalar& c) const {
  Poly p;
  const Scalar k = field_.embed(c);
  if (!k.is_zero() && !truncated(e)) p.terms.emplace(e, k);
  return p;
}

Value PolyRing::variable(std::size_t i) const {
  Exponents e(vars_.size(), 0);
  e[i] = 1;
  return monomial(e, field_.one());
}

bool PolyRing::truncated(const Exponents& e) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (truncation_[i] != 0 && e[i] >= truncation_[i]) return true;
  }
  return false;
}

std::string PolyRing::descriptor() const {
  std::string out = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? "," : "") + vars_[i];
  if (unbounded_) out += ",...";
  out += "]";
  std::string rel;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (truncation_[i] == 0) continue;
    rel += (rel.empty() ? "" : ",") + vars_[i] + "^" + std::to_string(truncation_[i]);
  }
  if (!rel.empty()) out += "/(" + rel + ")";
  return out;
}

Value PolyRing::one() const { return monomial(Exponents(vars_.size(), 0), field_.one()); }

Value PolyRing::from_scalar(const Scalar& s) const { return monomial(Exponents(vars_.size(), 0), s); }

Value PolyRing::add(const Value& a, const Value& b) const {
  Poly out = a.as<Poly>();
  for (const auto& [e, c] : b.as<Poly>().terms) {
    auto [it, inserted] = out.terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

Value PolyRing::neg(const Value& a) const {
  Poly out = a.as<Poly>();
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

Value PolyRing::mul(const Value& a, const Value& b) const {
  Poly out;
  const std::size_t m = vars_.size();
  Exponents e(m);
  for (const auto& [ea, ca] : a.as<Poly>().terms) {
    for (const auto& [eb, cb] : b.as<Poly>().terms) {
      for (std::size_t i = 0; i < m; ++i) e[i] = ea[i] + eb[i];
      if (truncated(e)) continue;
      auto [it, inserted] = out.terms.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

Value PolyRing::scale(const Scalar& s, const Value& a) const {
  const Scalar k = field_.embed(s);
  if (k.is_zero()) return Poly{};
  Poly out = a.as<Poly>();
  for (auto& [e, c] : out.terms) c = k * c;
  return out;
}

bool PolyRing::equal(const Value& a, const Value& b) const {
  const auto& x = a.as<Poly>().terms;
  const auto& y = b.as<Poly>().terms;
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(), [](const auto& p, const auto& q) {
           return p.first == q.first && p.second == q.second;
         });
}

Value PolyRing::normalize(const Value& a) const {
  Poly out;
  for (const auto& [e, c] : a.as<Poly>().terms) {
    if (e.size() != vars_.size()) throw Error(Errc::RingMismatch, "monomial arity differs from " + descriptor());
    const Scalar k = field_.contains(c) ? c : field_.embed(c);
    if (!k.is_zero() && !truncated(e)) out.terms.emplace(e, k);
  }
  return out;
}

bool PolyRing::contains(const Value& a) const {
  if (!a.holds<Poly>()) return false;
  for (const auto& [e, c] : a.as<Poly>().terms) {
    if (e.size() != vars_.size() || c.is_zero() || !field_.contains(c) || truncated(e)) return false;
  }
  return true;
}

std::vector<Value> PolyRing::generators() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) out.push_back(variable(i));
  if (field_.kind() == ScalarField::Kind::Gaussian) out.push_back(from_scalar(Scalar::gaussian(0, 1)));
  return out;
}

Value PolyRing::random(Rng& rng) const {
  const auto terms = rng.uniform(0, 3);
  Value out = zero();
  const auto m = static_cast<std::int64_t>(vars_.size());
  for (std::int64_t t = 0; t < terms; ++t) {
    Exponents e(vars_.size(), 0);
    const auto degree = rng.uniform(0, 2);
    for (std::int64_t d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(rng.uniform(0, m - 1))];
    out = add(out, monomial(e, detail::random_scalar(field_, rng)));
  }
  return out;
}

std::string PolyRing::render(const Value& a) const {
  const auto& terms = a.as<Poly>().terms;
  if (terms.empty()) return "0";
  std::vector<const std::pair<const Exponents, Scalar>*> order;
  for (const auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const auto dx = std::accumulate(x->first.begin(), x->first.end(), 0U);
    const auto dy = std::accumulate(y->first.begin(), y->first.end(), 0U);
    if (dx != dy) return dx < dy;
    return x->first > y->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    append_term(out, t->second, render_monomial(vars_, t->first), first);
    first = false;
  }
  return out;
}

std::optional<bool> PolyRing::is_prime() const {
  return std::all_of(truncation_.begin(), truncation_.end(), [](std::uint32_t b) { return b <= 1; });
}

std::optional<std::size_t> PolyRing::dimension() const {
  std::size_t dim = field_.degree();
  for (std::uint32_t b : truncation_) {
    if (b == 0) return std::nullopt;
    dim *= b;
  }
  return dim;
}

Exponents PolyRing::monomial_of_index(std::size_t index) const {
  Exponents e(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    e[i] = static_cast<std::uint32_t>(index % truncation_[i]);
    index /= truncation_[i];
  }
  return e;
}

std::size_t PolyRing::index_of_monomial(const Exponents& e) const {
  std::size_t index = 0;
  for (std::size_t i = vars_.size(); i-- > 0;) index = index * truncation_[i] + e[i];
  return index;
}

std::vector<Scalar> PolyRing::coords(const Value& a) const {
  const auto dim = dimension();
  if (!dim) return Ring::coords(a);
  const std::size_t deg = field_.degree();
  std::vector<Scalar> out(*dim, coord_zero());
  std::vector<Scalar> buf;
  for (const auto& [e, c] : a.as<Poly>().terms) {
    buf.clear();
    field_.append_coords(c, buf);
    const std::size_t base = index_of_monomial(e) * deg;
    for (std::size_t k = 0; k < deg; ++k) out[base + k] = buf[k];
  }
  return out;
}

Value PolyRing::from_coords(std::span<const Scalar> c) const {
  const auto dim = dimension();
  if (!dim) return Ring::from_coords(c);
  const std::size_t deg = field_.degree();
  Poly out;
  for (std::size_t idx = 0; idx * deg < *dim; ++idx) {
    Scalar s = field_.from_coords(c.data() + idx * deg);
    if (!s.is_zero()) out.terms.emplace(monomial_of_index(idx), s);
  }
  return out;
}

bool PolyRing::is_regular(const Value& a) const {
  // McCoy: over an Artinian local coefficient ring a polynomial is a zero
  // divisor iff its image with the nilpotent variables set to 0 vanishes.
  for (const auto& [e, c] : a.as<Poly>().terms) {
    bool reduced = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (truncation_[i] != 0 && e[i] > 0) reduced = false;
    }
    if (reduced) return true;
  }
  return false;
}

std::optional<Value> PolyRing::inverse(const Value& a) const {
  const Exponents constant(vars_.size(), 0);
  const auto& terms = a.as<Poly>().terms;
  auto it = terms.find(constant);
  if (it == terms.end()) return std::nullopt;
  for (const auto& [e, c] : terms) {
    if (e == constant) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0 && truncation_[i] == 0) return std::nullopt;
    }
  }
  // a = c(1 - n) with n nilpotent.
  const Scalar cinv = it->second.inverse();
  const Value n = sub(one(), scale(cinv, a));
  Value sum = one();
  Value power = one();
  while (true) {
    power = mul(power, n);
    if (is_zero(power)) break;
    sum = add(sum, power);
  }
  return scale(cinv, sum);
}

std::optional<Value> PolyRing::divide(const Value& a, const Value& d) const {
  if (auto inv = inverse(d)) return mul(a, *inv);
  if (is_zero(d)) return std::nullopt;
  if (std::any_of(truncation_.begin(), truncation_.end(), [](std::uint32_t b) { return b != 0; })) {
    return std::nullopt;
  }
  const auto& [lead_e, lead_c] = *d.as<Poly>().terms.rbegin();
  Value q = zero();
  Value r = a;
  while (!is_zero(r)) {
    const auto& [re, rc] = *r.as<Poly>().terms.rbegin();
    Exponents t(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      t[i] = re[i] - lead_e[i];
    }
    const Value step = monomial(t, rc / lead_c);
    q = add(q, step);
    r = sub(r, mul(step, d));
  }
  return q;
}

CenterDescription PolyRing::center() const {
  if (dimension()) return {basis(), true};
  CenterDescription out{{one()}, false};
  for (const Value& g : generators()) out.elements.push_back(g);
  return out;
}

std::optional<Value> PolyRing::symbol(std::string_view name) const {
  if (auto i = variable_index(name)) return variable(*i);
  return std::nullopt;
}

}  // namespace skewlab::rings
