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

#include "skewlab/rings/linalg.hpp"

#include <algorithm>

namespace skewlab::rings {

Scalar unit_like(const Scalar& zero) {
  switch (zero.kind()) {
    case Scalar::Kind::ModP: return Scalar::mod_p(1, zero.modulus());
    case Scalar::Kind::Gaussian: return Scalar::gaussian(1, 0);
    default: return Scalar::rational(1);
  }
}

ScalarMatrix ScalarMatrix::from_columns(std::size_t rows, std::span<const ScalarVector> columns,
                                        const Scalar& zero) {
  ScalarMatrix m(rows, columns.size(), zero);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

RowEchelon rref(ScalarMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), m.zero());
    v[free] = unit_like(m.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve(const ScalarMatrix& m, std::span<const Scalar> rhs) {
  ScalarMatrix aug(m.rows(), m.cols() + 1, m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  ScalarVector x(m.cols(), m.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, m.cols());
  return x;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace skewlab::rings
