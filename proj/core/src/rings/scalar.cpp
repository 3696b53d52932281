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

#include "skewlab/rings/scalar.hpp"

#include <algorithm>

#include "skewlab/error.hpp"

namespace skewlab::rings {

namespace {

bool denominator_is_power_of_two(const mpq_class& q) {
  const mpz_class& d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

// Moduli stay below 2^31, so the product fits in 64 bits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

Scalar::Kind promote(Scalar::Kind a, Scalar::Kind b) {
  return static_cast<Scalar::Kind>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

void check_compatible(const Scalar& a, const Scalar& b) {
  const bool ap = a.kind() == Scalar::Kind::ModP;
  const bool bp = b.kind() == Scalar::Kind::ModP;
  if (ap != bp || (ap && a.modulus() != b.modulus())) {
    throw Error(Errc::FieldMismatch, "cannot combine " + a.to_string() + " and " + b.to_string() +
                                         " from different fields");
  }
}

// A rational result of kind Dyadic that left Z[1/2] is demoted to Rational.
Scalar settle(Scalar::Kind kind, mpq_class re, mpq_class im) {
  if (kind == Scalar::Kind::Gaussian) return Scalar::gaussian(std::move(re), std::move(im));
  if (kind == Scalar::Kind::Dyadic && denominator_is_power_of_two(re)) {
    return Scalar::dyadic(std::move(re));
  }
  return Scalar::rational(std::move(re));
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar Scalar::rational(mpq_class value) {
  Scalar s;
  value.canonicalize();
  s.kind_ = Kind::Rational;
  s.re_ = std::move(value);
  return s;
}

Scalar Scalar::integer(const mpz_class& value) { return rational(mpq_class(value)); }

Scalar Scalar::dyadic(mpq_class value) {
  value.canonicalize();
  if (!denominator_is_power_of_two(value)) {
    throw Error(Errc::BadLiteral, value.get_str() + " is not a dyadic rational");
  }
  Scalar s;
  s.kind_ = Kind::Dyadic;
  s.re_ = std::move(value);
  return s;
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  Scalar s;
  s.kind_ = Kind::Gaussian;
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::mod_p(const mpz_class& value, std::uint64_t p) {
  Scalar s;
  s.kind_ = Kind::ModP;
  s.re_ = 0;
  s.modulus_ = p;
  s.residue_ = reduce_mod(value, p);
  return s;
}

bool Scalar::is_zero() const noexcept {
  if (kind_ == Kind::ModP) return residue_ == 0;
  return sgn(re_) == 0 && sgn(im_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (kind_ == Kind::ModP) return residue_ == 1 % modulus_;
  return re_ == 1 && sgn(im_) == 0;
}

bool Scalar::is_integer() const noexcept {
  if (kind_ == Kind::ModP) return true;
  return sgn(im_) == 0 && re_.get_den() == 1;
}

bool Scalar::is_dyadic() const noexcept {
  if (kind_ == Kind::ModP) return false;
  return sgn(im_) == 0 && denominator_is_power_of_two(re_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case Kind::ModP: {
      Scalar s = *this;
      s.residue_ = powmod(residue_, modulus_ - 2, modulus_);
      return s;
    }
    case Kind::Gaussian: {
      mpq_class norm = re_ * re_ + im_ * im_;
      return gaussian(re_ / norm, -im_ / norm);
    }
    default:
      return settle(kind_, 1 / re_, 0);
  }
}

Scalar Scalar::conj() const {
  if (kind_ != Kind::Gaussian) return *this;
  return gaussian(re_, -im_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_compatible(a, b);
  if (a.kind_ == Scalar::Kind::ModP) {
    Scalar s = a;
    s.residue_ = (a.residue_ + b.residue_) % a.modulus_;
    return s;
  }
  return settle(promote(a.kind_, b.kind_), a.re_ + b.re_, a.im_ + b.im_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_compatible(a, b);
  if (a.kind_ == Scalar::Kind::ModP) {
    Scalar s = a;
    s.residue_ = mulmod(a.residue_, b.residue_, a.modulus_);
    return s;
  }
  return settle(promote(a.kind_, b.kind_), a.re_ * b.re_ - a.im_ * b.im_,
                a.re_ * b.im_ + a.im_ * b.re_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (kind_ == Kind::ModP) {
    s.residue_ = (modulus_ - residue_) % modulus_;
  } else {
    s.re_ = -re_;
    s.im_ = -im_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const bool ap = a.kind_ == Scalar::Kind::ModP;
  const bool bp = b.kind_ == Scalar::Kind::ModP;
  if (ap || bp) return ap && bp && a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
  return a.re_ == b.re_ && a.im_ == b.im_;
}

std::string Scalar::to_string() const {
  if (kind_ == Kind::ModP) return std::to_string(residue_);
  if (kind_ != Kind::Gaussian || sgn(im_) == 0) return rational_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else if (im_.get_den() == 1) {
    imag = rational_string(im_) + "i";
  } else {
    imag = rational_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag.front() == '-') return rational_string(re_) + imag;
  return rational_string(re_) + "+" + imag;
}

bool Scalar::is_compound() const {
  if (kind_ == Kind::ModP) return false;
  if (kind_ == Kind::Gaussian && sgn(im_) != 0) return sgn(re_) != 0 || im_.get_den() != 1;
  return re_.get_den() != 1;
}

ScalarField ScalarField::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31U) || mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) {
    throw Error(Errc::Unsupported, "F_" + std::to_string(p) + " requires a prime below 2^31");
  }
  return ScalarField(Kind::Prime, p);
}

std::string ScalarField::name() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Gaussian: return "Q(i)";
    case Kind::Prime: return "F_" + std::to_string(p_);
  }
  return "?";
}

Scalar ScalarField::zero() const { return from_int(0); }
Scalar ScalarField::one() const { return from_int(1); }

Scalar ScalarField::from_int(long v) const {
  switch (kind_) {
    case Kind::Rational: return Scalar::rational(v);
    case Kind::Gaussian: return Scalar::gaussian(v, 0);
    case Kind::Prime: return Scalar::mod_p(mpz_class(v), p_);
  }
  return {};
}

Scalar ScalarField::embed(const Scalar& s) const {
  if (s.kind() == Scalar::Kind::ModP) {
    if (kind_ != Kind::Prime || s.modulus() != p_) {
      throw Error(Errc::FieldMismatch, "residue mod " + std::to_string(s.modulus()) + " is not in " + name());
    }
    return s;
  }
  switch (kind_) {
    case Kind::Rational:
      if (sgn(s.im()) != 0) throw Error(Errc::FieldMismatch, s.to_string() + " is not rational");
      return Scalar::rational(s.re());
    case Kind::Gaussian: return Scalar::gaussian(s.re(), s.im());
    case Kind::Prime: {
      if (sgn(s.im()) != 0) throw Error(Errc::FieldMismatch, s.to_string() + " is not in " + name());
      Scalar num = Scalar::mod_p(s.re().get_num(), p_);
      Scalar den = Scalar::mod_p(s.re().get_den(), p_);
      if (den.is_zero()) {
        throw Error(Errc::DivisionByZero, s.to_string() + " has a denominator divisible by " + std::to_string(p_));
      }
      return num * den.inverse();
    }
  }
  return s;
}

bool ScalarField::contains(const Scalar& s) const {
  switch (kind_) {
    case Kind::Prime: return s.kind() == Scalar::Kind::ModP && s.modulus() == p_;
    case Kind::Rational: return s.kind() != Scalar::Kind::ModP && sgn(s.im()) == 0;
    case Kind::Gaussian: return s.kind() != Scalar::Kind::ModP;
  }
  return false;
}

void ScalarField::append_coords(const Scalar& s, std::vector<Scalar>& out) const {
  switch (kind_) {
    case Kind::Prime: out.push_back(s); break;
    case Kind::Rational: out.push_back(Scalar::rational(s.re())); break;
    case Kind::Gaussian:
      out.push_back(Scalar::rational(s.re()));
      out.push_back(Scalar::rational(s.im()));
      break;
  }
}

Scalar ScalarField::from_coords(const Scalar* coords) const {
  switch (kind_) {
    case Kind::Prime: return coords[0];
    case Kind::Rational: return Scalar::rational(coords[0].re());
    case Kind::Gaussian: return Scalar::gaussian(coords[0].re(), coords[1].re());
  }
  return {};
}

}  // namespace skewlab::rings
