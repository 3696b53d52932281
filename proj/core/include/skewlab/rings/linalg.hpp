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

#ifndef SKEWLAB_RINGS_LINALG_HPP
#define SKEWLAB_RINGS_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skewlab/rings/scalar.hpp"

namespace skewlab::rings {

using ScalarVector = std::vector<Scalar>;

/// Dense matrix over an exact field (Q, Q(i) or F_p).
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols, const Scalar& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero), zero_(zero) {}

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static ScalarMatrix from_columns(std::size_t rows, std::span<const ScalarVector> columns,
                                   const Scalar& zero);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& zero() const noexcept { return zero_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
  Scalar zero_;
};

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(ScalarMatrix m);

std::size_t rank(const ScalarMatrix& m);

/// Canonical kernel basis: one vector per free column, with a 1 in that
/// column, ordered by free column index.
std::vector<ScalarVector> nullspace(const ScalarMatrix& m);

/// Canonical solution of m*x = rhs (all free variables set to zero), if any.
std::optional<ScalarVector> solve(const ScalarMatrix& m, std::span<const Scalar> rhs);

bool is_zero_vector(std::span<const Scalar> v);

/// The 1 of the field that `zero` belongs to.
Scalar unit_like(const Scalar& zero);

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_LINALG_HPP
