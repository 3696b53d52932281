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

#include "skewlab/ore/orepoly.hpp"

#include <algorithm>

#include "skewlab/error.hpp"

namespace skewlab::ore {

using rings::Expr;
using rings::Ring;

ContextPtr OreContext::make(const Endo& sigma, const SigmaDeriv& delta, std::string var) {
  if (!delta.sigma().same(sigma) &&
      !(rings::same_ring(*delta.ring(), *sigma.ring()) && delta.sigma().describe() == sigma.describe())) {
    throw Error(Errc::ContextMismatch, "δ is a " + delta.sigma().describe() + "-derivation, not a " + sigma.describe() +
                                           "-derivation");
  }
  if (var.empty()) {
    for (const char* candidate : {"x", "y", "z"}) {
      bool taken = true;
      try {
        sigma.ring()->evaluate_unchecked(rings::parse_literal(candidate));
      } catch (const Error&) {
        taken = false;
      }
      if (!taken) {
        var = candidate;
        break;
      }
    }
    if (var.empty()) throw Error(Errc::ContextMismatch, "no free name for the Ore variable");
  }
  return ContextPtr(new OreContext(sigma, delta, std::move(var)));
}

std::string OreContext::describe() const {
  return ring()->descriptor() + "[" + var_ + "; " + sigma_.describe() + ", " + delta_.describe() + "]";
}

ContextPtr OreContext::graded() const {
  if (delta_is_zero()) return shared_from_this();
  return make(sigma_, twists::zero_derivation(sigma_), var_);
}

namespace {

void require_same(const OrePoly& a, const OrePoly& b) {
  if (a.context() != b.context()) {
    throw Error(Errc::ContextMismatch, a.context()->describe() + " vs " + b.context()->describe());
  }
}

// No space or sign outside brackets (a leading sign is allowed).
bool is_atomic(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
    } else if (depth == 0 && (c == ' ' || c == '+' || (c == '-' && i > 0))) {
      return false;
    }
  }
  return true;
}

std::vector<Value> trimmed(const Ring& ring, std::vector<Value> c) {
  while (!c.empty() && ring.is_zero(c.back())) c.pop_back();
  return c;
}

}  // namespace

OrePoly::OrePoly(ContextPtr ctx, std::vector<Value> coeffs)
    : ctx_(std::move(ctx)), coeffs_(trimmed(*ctx_->ring(), std::move(coeffs))) {}

OrePoly OrePoly::monomial(const ContextPtr& ctx, const Value& c, std::size_t degree) {
  std::vector<Value> coeffs(degree + 1, ctx->ring()->zero());
  coeffs[degree] = c;
  return {ctx, std::move(coeffs)};
}

Value OrePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_->ring()->zero(); }

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
  require_same(a, b);
  const Ring& ring = *a.ctx_->ring();
  std::vector<Value> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ring.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.add(a.coeff(i), b.coeff(i));
  return {a.ctx_, std::move(c)};
}

OrePoly OrePoly::operator-() const {
  const Ring& ring = *ctx_->ring();
  std::vector<Value> c;
  for (const Value& v : coeffs_) c.push_back(ring.neg(v));
  return {ctx_, std::move(c)};
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }

bool operator==(const OrePoly& a, const OrePoly& b) {
  require_same(a, b);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  const Ring& ring = *a.ctx_->ring();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!ring.equal(a.coeffs_[i], b.coeffs_[i])) return false;
  }
  return true;
}

OrePoly OrePoly::pow(std::uint32_t k) const {
  OrePoly out = constant(ctx_, ctx_->ring()->one());
  for (std::uint32_t i = 0; i < k; ++i) out = ore_mul(out, *this);
  return out;
}

OrePoly OrePoly::in(const ContextPtr& other) const {
  if (!rings::same_ring(*other->ring(), *ctx_->ring())) throw Error(Errc::ContextMismatch, "contexts over different rings");
  return {other, coeffs_};
}

std::string OrePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  const Ring& ring = *ctx_->ring();
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring.is_zero(coeffs_[i])) continue;
    std::string s = ring.render(coeffs_[i]);
    bool minus = false;
    if (ring.equal(coeffs_[i], ring.one())) {
      s = "1";
    } else if (ring.equal(coeffs_[i], ring.neg(ring.one()))) {
      s = "-1";
    }
    const bool atomic = is_atomic(s);
    if (atomic && s[0] == '-') {
      minus = true;
      s.erase(0, 1);
    } else if (!atomic) {
      s = "(" + s + ")";
    }
    std::string term;
    if (i == 0) {
      term = s;
    } else {
      const std::string xp = i == 1 ? ctx_->var() : ctx_->var() + "^" + std::to_string(i);
      term = s == "1" ? xp : s + "*" + xp;
    }
    if (first) {
      out += (minus ? "-" : "") + term;
    } else {
      out += (minus ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

OrePoly x_times_elem(const ContextPtr& ctx, const Value& a) {
  const Ring& ring = *ctx->ring();
  if (!ring.contains(a)) throw Error(Errc::RingMismatch, ring.render(a) + " is not in " + ring.descriptor());
  return {ctx, {ctx->delta()(a), ctx->sigma()(a)}};
}

OrePoly x_times_elem(const ContextPtr& ctx, const rings::RingElem& a) {
  if (!rings::same_ring(*a.ring(), *ctx->ring())) {
    throw Error(Errc::RingMismatch, a.ring()->descriptor() + " vs " + ctx->ring()->descriptor());
  }
  return x_times_elem(ctx, a.value());
}

OrePoly x_times(const OrePoly& p) {
  const ContextPtr& ctx = p.context();
  const Ring& ring = *ctx->ring();
  std::vector<Value> c(p.coeffs().size() + 1, ring.zero());
  const bool has_delta = !ctx->delta_is_zero();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    c[k + 1] = ring.add(c[k + 1], ctx->sigma()(p.coeffs()[k]));
    if (has_delta) c[k] = ring.add(c[k], ctx->delta()(p.coeffs()[k]));
  }
  return {ctx, std::move(c)};
}

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
  require_same(f, g);
  const ContextPtr& ctx = f.context();
  const Ring& ring = *ctx->ring();
  if (f.is_zero() || g.is_zero()) return OrePoly::zero(ctx);
  const std::size_t df = f.coeffs().size();
  const std::size_t dg = g.coeffs().size();
  std::vector<Value> out(df + dg - 1, ring.zero());
  for (std::size_t j = 0; j < dg; ++j) {
    if (ring.is_zero(g.coeffs()[j])) continue;
    // x^i · g_j for i = 0, 1, …, by repeated left multiplication by x.
    OrePoly power = OrePoly::constant(ctx, g.coeffs()[j]);
    for (std::size_t i = 0; i < df; ++i) {
      if (i > 0) power = x_times(power);
      const Value& fi = f.coeffs()[i];
      if (ring.is_zero(fi)) continue;
      for (std::size_t k = 0; k < power.coeffs().size(); ++k) {
        out[k + j] = ring.add(out[k + j], ring.mul(fi, power.coeffs()[k]));
      }
    }
  }
  return {ctx, std::move(out)};
}

OrePoly ore_commutator(const OrePoly& f, const OrePoly& g) { return ore_mul(f, g) - ore_mul(g, f); }

GradedLeadReport graded_lead_check(const OrePoly& f, const OrePoly& g) {
  require_same(f, g);
  GradedLeadReport r;
  const ContextPtr& ctx = f.context();
  const Ring& ring = *ctx->ring();
  r.degree_f = f.degree();
  r.degree_g = g.degree();
  if (f.is_zero() || g.is_zero()) {
    // fg = 0 holds trivially.
    r.expected_lead = ring.zero();
    r.lead_matches = r.graded_matches = r.pass = true;
    return r;
  }
  const auto m = static_cast<std::uint32_t>(f.degree());
  const std::size_t top = static_cast<std::size_t>(f.degree() + g.degree());
  r.expected_lead = ring.mul(f.lead(), ctx->sigma().apply_power(g.lead(), m));
  r.expected_nonzero = !ring.is_zero(r.expected_lead);
  const OrePoly prod = ore_mul(f, g);
  const ContextPtr graded = ctx->graded();
  const OrePoly prod0 = ore_mul(f.in(graded), g.in(graded));
  r.product_degree = prod.degree();
  r.lead_matches = ring.equal(prod.coeff(top), r.expected_lead);
  r.graded_matches = ring.equal(prod.coeff(top), prod0.coeff(top));
  const bool degree_ok = r.expected_nonzero ? prod.degree() == static_cast<int>(top)
                                            : prod.degree() < static_cast<int>(top);
  r.pass = r.lead_matches && r.graded_matches && degree_ok;
  return r;
}

OrePoly random_ore(const ContextPtr& ctx, rings::Rng& rng, std::uint32_t max_degree) {
  const auto degree = static_cast<std::size_t>(rng.uniform(0, max_degree));
  std::vector<Value> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(ctx->ring()->random(rng));
  return {ctx, std::move(c)};
}

OrePoly evaluate_ore(const ContextPtr& ctx, const Expr& e) {
  const Ring& ring = *ctx->ring();
  if (!rings::mentions(e, ctx->var())) return OrePoly::constant(ctx, ring.evaluate(e));
  switch (e.kind) {
    case Expr::Kind::Symbol: return OrePoly::x(ctx);
    case Expr::Kind::Neg: return -evaluate_ore(ctx, e.args[0]);
    case Expr::Kind::Add: return evaluate_ore(ctx, e.args[0]) + evaluate_ore(ctx, e.args[1]);
    case Expr::Kind::Sub: return evaluate_ore(ctx, e.args[0]) - evaluate_ore(ctx, e.args[1]);
    case Expr::Kind::Mul: return evaluate_ore(ctx, e.args[0]) * evaluate_ore(ctx, e.args[1]);
    case Expr::Kind::Pow: return evaluate_ore(ctx, e.args[0]).pow(e.exponent);
    case Expr::Kind::Div: {
      if (rings::mentions(e.args[1], ctx->var())) throw Error(Errc::BadLiteral, "cannot divide by the Ore variable");
      const Value d = ring.evaluate(e.args[1]);
      auto inv = ring.inverse(d);
      if (!inv) throw Error(Errc::BadLiteral, "divisor " + ring.render(d) + " is not invertible");
      return evaluate_ore(ctx, e.args[0]) * OrePoly::constant(ctx, *inv);
    }
    default:
      throw Error(Errc::BadLiteral, "the Ore variable " + ctx->var() + " cannot appear inside this construct (position " +
                                        std::to_string(e.pos) + ")");
  }
}

OrePoly parse_ore(const ContextPtr& ctx, std::string_view text) {
  return evaluate_ore(ctx, rings::parse_literal(text));
}

}  // namespace skewlab::ore
