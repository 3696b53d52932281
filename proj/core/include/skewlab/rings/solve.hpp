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

#ifndef SKEWLAB_RINGS_SOLVE_HPP
#define SKEWLAB_RINGS_SOLVE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "skewlab/rings/linalg.hpp"
#include "skewlab/rings/ring.hpp"

namespace skewlab::rings {

/// Matrix of a linear condition on unknown coefficients c_0..c_{m-1}: column k
/// stacks the coordinates (in `target`) of every value returned by
/// `column(k)`.  All calls must return the same number of values.
ScalarMatrix stacked_columns(const Ring& target, std::size_t unknowns,
                             const std::function<std::vector<Value>(std::size_t)>& column);

/// Σ c_k v_k in `ring`, with c over the coordinate prime field.
Value combine(const Ring& ring, std::span<const Scalar> c, std::span<const Value> v);

/// Throws Unsupported unless the ring has a finite basis.
void require_finite_basis(const Ring& ring, std::string_view operation);

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_SOLVE_HPP
