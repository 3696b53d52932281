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

#ifndef SKEWLAB_RINGS_DETAIL_HPP
#define SKEWLAB_RINGS_DETAIL_HPP

#include "skewlab/rings/random.hpp"
#include "skewlab/rings/scalar.hpp"

namespace skewlab::rings::detail {

Scalar random_scalar(const ScalarField& field, Rng& rng);
bool is_negative(const Scalar& s);

}  // namespace skewlab::rings::detail

#endif  // SKEWLAB_RINGS_DETAIL_HPP
