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

const Mat& as_mat(const Value& v) { return v.as<Mat>(); }

// Laplace expansion along the first row; matrices here are at most a few rows.
Value det_entries(const Ring& base, const std::vector<Value>& e, std::size_t n) {
  if (n == 1) return e[0];
  if (n == 2) return base.sub(base.mul(e[0], e[3]), base.mul(e[1], e[2]));
  Value total = base.zero();
  std::vector<Value> sub;
  for (std::size_t col = 0; col < n; ++col) {
    if (base.is_zero(e[col])) continue;
    sub.clear();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) sub.push_back(e[r * n + c]);
      }
    }
    Value term = base.mul(e[col], det_entries(base, sub, n - 1));
    total = (col % 2 == 0) ? base.add(total, term) : base.sub(total, term);
  }
  return total;
}

}  // namespace

MatrixRing::MatrixRing(RingPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
  if (n_ == 0) throw Error(Errc::UnsupportedKind, "matrix size must be at least 1");
}

std::string MatrixRing::descriptor() const {
  return "M_" + std::to_string(n_) + "(" + base_->descriptor() + ")";
}

Value MatrixRing::zero() const { return Mat{n_, std::vector<Value>(n_ * n_, base_->zero())}; }

Value MatrixRing::scalar_matrix(const Value& c) const {
  Mat m{n_, std::vector<Value>(n_ * n_, base_->zero())};
  for (std::size_t i = 0; i < n_; ++i) m.entries[i * n_ + i] = c;
  return m;
}

Value MatrixRing::diag(const std::vector<Value>& d) const {
  Mat m{n_, std::vector<Value>(n_ * n_, base_->zero())};
  for (std::size_t i = 0; i < n_; ++i) m.entries[i * n_ + i] = d.at(i);
  return m;
}

Value MatrixRing::one() const { return scalar_matrix(base_->one()); }

Value MatrixRing::from_scalar(const Scalar& s) const { return scalar_matrix(base_->from_scalar(s)); }

Value MatrixRing::unit(std::size_t i, std::size_t j) const {
  Mat m{n_, std::vector<Value>(n_ * n_, base_->zero())};
  m.entries.at(i * n_ + j) = base_->one();
  return m;
}

Value MatrixRing::add(const Value& a, const Value& b) const {
  Mat out{n_, {}};
  out.entries.reserve(n_ * n_);
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    out.entries.push_back(base_->add(as_mat(a).entries[k], as_mat(b).entries[k]));
  }
  return out;
}

Value MatrixRing::neg(const Value& a) const {
  Mat out{n_, {}};
  for (const Value& e : as_mat(a).entries) out.entries.push_back(base_->neg(e));
  return out;
}

Value MatrixRing::mul(const Value& a, const Value& b) const {
  const auto& x = as_mat(a).entries;
  const auto& y = as_mat(b).entries;
  Mat out{n_, std::vector<Value>(n_ * n_, base_->zero())};
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Value& xik = x[i * n_ + k];
      if (base_->is_zero(xik)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Value& ykj = y[k * n_ + j];
        if (base_->is_zero(ykj)) continue;
        out.entries[i * n_ + j] = base_->add(out.entries[i * n_ + j], base_->mul(xik, ykj));
      }
    }
  }
  return out;
}

Value MatrixRing::scale(const Scalar& s, const Value& a) const {
  Mat out{n_, {}};
  for (const Value& e : as_mat(a).entries) out.entries.push_back(base_->scale(s, e));
  return out;
}

bool MatrixRing::equal(const Value& a, const Value& b) const {
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    if (!base_->equal(as_mat(a).entries[k], as_mat(b).entries[k])) return false;
  }
  return true;
}

Value MatrixRing::normalize(const Value& a) const {
  const Mat& m = as_mat(a);
  if (m.n != n_ || m.entries.size() != n_ * n_) {
    throw Error(Errc::RingMismatch, "matrix shape differs from " + descriptor());
  }
  Mat out{n_, {}};
  for (const Value& e : m.entries) out.entries.push_back(base_->normalize(e));
  return out;
}

bool MatrixRing::contains(const Value& a) const {
  if (!a.holds<Mat>()) return false;
  const Mat& m = as_mat(a);
  if (m.n != n_ || m.entries.size() != n_ * n_) return false;
  for (const Value& e : m.entries) {
    if (!base_->contains(e)) return false;
  }
  return true;
}

std::vector<Value> MatrixRing::generators() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.push_back(unit(i, j));
  }
  for (const Value& g : base_->generators()) {
    if (!base_->equal(g, base_->one())) out.push_back(scalar_matrix(g));
  }
  return out;
}

Value MatrixRing::random(Rng& rng) const {
  Mat out{n_, {}};
  for (std::size_t k = 0; k < n_ * n_; ++k) out.entries.push_back(base_->random(rng));
  return out;
}

std::string MatrixRing::render(const Value& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += base_->render(as_mat(a).entries[i * n_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

std::optional<std::size_t> MatrixRing::dimension() const {
  auto d = base_->dimension();
  if (!d) return std::nullopt;
  return *d * n_ * n_;
}

std::vector<Scalar> MatrixRing::coords(const Value& a) const {
  if (!dimension()) return Ring::coords(a);
  std::vector<Scalar> out;
  for (const Value& e : as_mat(a).entries) {
    const auto c = base_->coords(e);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Value MatrixRing::from_coords(std::span<const Scalar> c) const {
  const auto d = base_->dimension();
  if (!d) return Ring::from_coords(c);
  Mat out{n_, {}};
  for (std::size_t k = 0; k < n_ * n_; ++k) out.entries.push_back(base_->from_coords(c.subspan(k * *d, *d)));
  return out;
}

Value MatrixRing::det(const Value& a) const {
  if (!base_->is_commutative()) throw Error(Errc::Unsupported, "determinant over a noncommutative base");
  return det_entries(*base_, as_mat(a).entries, n_);
}

Value MatrixRing::minor(const Value& a, std::size_t row, std::size_t col) const {
  std::vector<Value> sub;
  const auto& e = as_mat(a).entries;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (r != row && c != col) sub.push_back(e[r * n_ + c]);
    }
  }
  if (n_ == 1) return base_->one();
  return det_entries(*base_, sub, n_ - 1);
}

bool MatrixRing::is_regular(const Value& a) const {
  // Over a commutative base a matrix is a zero divisor iff its determinant is.
  if (base_->is_commutative()) return base_->is_regular(det(a));
  return Ring::is_regular(a);
}

std::optional<Value> MatrixRing::adjugate_inverse(const Value& a) const {
  auto dinv = base_->inverse(det(a));
  if (!dinv) return std::nullopt;
  Mat out{n_, std::vector<Value>(n_ * n_, base_->zero())};
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Value cof = minor(a, i, j);
      if ((i + j) % 2 == 1) cof = base_->neg(cof);
      out.entries[j * n_ + i] = base_->mul(cof, *dinv);
    }
  }
  return Value(std::move(out));
}

std::optional<Value> MatrixRing::inverse(const Value& a) const {
  if (base_->is_commutative()) return adjugate_inverse(a);
  return Ring::inverse(a);
}

std::optional<Value> MatrixRing::divide(const Value& a, const Value& d) const {
  if (!base_->is_commutative()) return Ring::divide(a, d);
  if (auto inv = inverse(d)) return mul(a, *inv);
  // a * adj(d) / det(d), entry by entry.
  const Value dd = det(d);
  if (base_->is_zero(dd)) return std::nullopt;
  Mat adj{n_, std::vector<Value>(n_ * n_, base_->zero())};
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Value cof = minor(d, i, j);
      if ((i + j) % 2 == 1) cof = base_->neg(cof);
      adj.entries[j * n_ + i] = cof;
    }
  }
  Value prod = mul(a, Value(std::move(adj)));
  Mat out{n_, {}};
  for (const Value& e : as_mat(prod).entries) {
    auto q = base_->divide(e, dd);
    if (!q) return std::nullopt;
    out.entries.push_back(*q);
  }
  Value result(std::move(out));
  if (!equal(mul(result, d), a)) return std::nullopt;
  return result;
}

CenterDescription MatrixRing::center() const {
  if (!base_->is_commutative()) return Ring::center();
  CenterDescription base_center = base_->center();
  CenterDescription out{{}, base_center.linear_span};
  for (const Value& c : base_center.elements) out.elements.push_back(scalar_matrix(c));
  return out;
}

std::optional<Value> MatrixRing::symbol(std::string_view name) const {
  if (name == "I") return one();
  if (name.size() == 3 && name[0] == 'E' && n_ <= 9) {
    const int i = name[1] - '1';
    const int j = name[2] - '1';
    if (i >= 0 && j >= 0 && static_cast<std::size_t>(i) < n_ && static_cast<std::size_t>(j) < n_) {
      return unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Expr e;
  e.kind = Expr::Kind::Symbol;
  e.name = std::string(name);
  return scalar_matrix(base_->evaluate_unchecked(e));
}

std::optional<Value> MatrixRing::call(std::string_view name, std::span<const Expr> args) const {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(Errc::BadLiteral, std::string(name) + " expects " + std::to_string(count) + " arguments");
    }
  };
  if (name == "diag" || name == "antidiag") {
    need(n_);
    Mat m{n_, std::vector<Value>(n_ * n_, base_->zero())};
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t col = name == "diag" ? i : n_ - 1 - i;
      m.entries[i * n_ + col] = base_->evaluate_unchecked(args[i]);
    }
    return Value(std::move(m));
  }
  if (name == "mat") {
    need(n_ * n_);
    Mat m{n_, {}};
    for (const Expr& e : args) m.entries.push_back(base_->evaluate_unchecked(e));
    return Value(std::move(m));
  }
  return std::nullopt;
}

std::optional<Value> MatrixRing::bracket(std::span<const Expr> items) const {
  if (items.size() != n_) throw Error(Errc::BadLiteral, "expected " + std::to_string(n_) + " rows");
  Mat m{n_, {}};
  for (const Expr& row : items) {
    if (row.kind != Expr::Kind::Bracket || row.args.size() != n_) {
      throw Error(Errc::BadLiteral, "each row must be a bracket of " + std::to_string(n_) + " entries");
    }
    for (const Expr& e : row.args) m.entries.push_back(base_->evaluate_unchecked(e));
  }
  return Value(std::move(m));
}

}  // namespace skewlab::rings
