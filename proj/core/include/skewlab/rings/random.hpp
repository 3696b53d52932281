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

#ifndef SKEWLAB_RINGS_RANDOM_HPP
#define SKEWLAB_RINGS_RANDOM_HPP

#include <cstdint>
#include <random>

namespace skewlab::rings {

/// Seeded generator with a portable bounded draw (std distributions are
/// implementation-defined, which would break cross-platform golden files).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Coefficient box used for sampled elements.
  std::int64_t coefficient() { return uniform(kBoxLow, kBoxHigh); }
  std::int64_t nonzero_coefficient() {
    std::int64_t c = 0;
    while (c == 0) c = coefficient();
    return c;
  }
  bool coin() { return (engine_() & 1U) != 0; }

  static constexpr std::int64_t kBoxLow = -9;
  static constexpr std::int64_t kBoxHigh = 9;

 private:
  std::mt19937_64 engine_;
};

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_RANDOM_HPP
