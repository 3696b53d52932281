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

#include "skewlab/rings/solve.hpp"

#include <string>

#include "skewlab/error.hpp"

namespace skewlab::rings {

ScalarMatrix stacked_columns(const Ring& target, std::size_t unknowns,
                             const std::function<std::vector<Value>(std::size_t)>& column) {
  std::vector<ScalarVector> cols;
  cols.reserve(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    ScalarVector col;
    for (const Value& v : column(k)) {
      const auto c = target.coords(v);
      col.insert(col.end(), c.begin(), c.end());
    }
    cols.push_back(std::move(col));
  }
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  return ScalarMatrix::from_columns(rows, cols, target.coord_zero());
}

Value combine(const Ring& ring, std::span<const Scalar> c, std::span<const Value> v) {
  Value out = ring.zero();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out = ring.add(out, ring.scale(c[k], v[k]));
  }
  return out;
}

void require_finite_basis(const Ring& ring, std::string_view operation) {
  if (!ring.dimension()) {
    throw Error(Errc::Unsupported, std::string(operation) + " needs a finite basis; " + ring.descriptor() +
                                       " has none");
  }
}

}  // namespace skewlab::rings
