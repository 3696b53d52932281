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

#ifndef SKEWLAB_RINGS_LITERAL_HPP
#define SKEWLAB_RINGS_LITERAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skewlab::rings {

/// Parsed form of an exact element literal such as `3/4*y1^2 - y2`,
/// `diag(1,2)`, `[[0, 1], [x, 0]]`, `(1, 1+2i)` or `frac(E12, 1)`.
/// Evaluation is done by a ring (or Ore context) that knows what
/// identifiers and calls mean.
struct Expr {
  enum class Kind { Number, Imag, Symbol, Call, Tuple, Bracket, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  mpz_class number;        // Number, Imag (coefficient of i)
  std::string name;        // Symbol, Call
  std::vector<Expr> args;  // operands / call arguments / list items
  std::uint32_t exponent = 0;
  std::size_t pos = 0;     // offset into the source text
};

/// Throws Error(BadLiteral) with the failing offset.
Expr parse_literal(std::string_view text);

/// True if the expression mentions the identifier anywhere.
bool mentions(const Expr& e, std::string_view symbol);

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_LITERAL_HPP
