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

#ifndef SKEWLAB_RINGS_SCALAR_HPP
#define SKEWLAB_RINGS_SCALAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace skewlab::rings {

/// Exact number. Rationals, dyadic rationals n/2^k and Gaussian rationals
/// a+bi interoperate (results promote along Dyadic < Rational < Gaussian);
/// residues mod p only combine with residues of the same modulus.
class Scalar {
 public:
  enum class Kind : std::uint8_t { Dyadic, Rational, Gaussian, ModP };

  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(mpq_class value);
  static Scalar integer(const mpz_class& value);
  /// Throws BadLiteral unless the denominator is a power of two.
  static Scalar dyadic(mpq_class value);
  static Scalar gaussian(mpq_class re, mpq_class im);
  static Scalar mod_p(const mpz_class& value, std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }
  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_integer() const noexcept;
  bool is_dyadic() const noexcept;

  Scalar inverse() const;
  Scalar conj() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// `3/4`, `-2`, `1+2i`, `(1/2)i`, `3` (mod p residues print as their representative).
  std::string to_string() const;
  /// True when to_string() needs parentheses as a product factor.
  bool is_compound() const;

 private:
  Kind kind_ = Kind::Rational;
  mpq_class re_{0};
  mpq_class im_{0};
  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Field from which scalars of a ring are drawn.  Coordinates are always taken
/// over the prime field (Q or F_p); Q(i) has the coordinate basis {1, i}.
class ScalarField {
 public:
  enum class Kind : std::uint8_t { Rational, Gaussian, Prime };

  static ScalarField rationals() { return ScalarField(Kind::Rational, 0); }
  static ScalarField gaussian() { return ScalarField(Kind::Gaussian, 0); }
  /// Throws Unsupported unless p is a prime below 2^31.
  static ScalarField prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  /// Maps a Q-family scalar into this field (reducing mod p when needed).
  Scalar embed(const Scalar& s) const;
  bool contains(const Scalar& s) const;

  /// Dimension of this field over its prime field.
  std::size_t degree() const noexcept { return kind_ == Kind::Gaussian ? 2 : 1; }
  ScalarField prime_field() const { return kind_ == Kind::Prime ? *this : rationals(); }
  void append_coords(const Scalar& s, std::vector<Scalar>& out) const;
  Scalar from_coords(const Scalar* coords) const;

  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  ScalarField(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_SCALAR_HPP
