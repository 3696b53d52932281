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

#ifndef SKEWLAB_PILAB_REPLAY_HPP
#define SKEWLAB_PILAB_REPLAY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewlab/twists/endo.hpp"

namespace skewlab::pilab {

struct ReplayCheck {
  std::string name;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
};

struct ReplayReport {
  std::string id;
  std::string family;
  std::vector<std::uint32_t> params;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<ReplayCheck> checks;
  /// Every observation made, including those without a fixture expectation.
  nlohmann::json observations = nlohmann::json::object();
  std::vector<std::string> notes;
  bool pass = false;
};

struct ReplayOptions {
  std::uint64_t seed = 0;
  std::uint64_t samples = 200;
  std::uint64_t budget = 100000;
};

/// Ids such as "ex-2.1" or "ex-4.9-infinite-shift(2,1,3)".  Throws
/// UnknownExample for unknown families or wrong parameter counts.
ReplayReport replay(std::string_view id, const ReplayOptions& options = {});

/// The replay suite listed in the fixture, in order.
std::vector<std::string> replay_suite();

/// The parsed expectation table.
const nlohmann::json& replay_fixture();

/// The constrained subring of M_2(Q[x]) used by the replays, and σ adjoint to diag(1,2).
rings::RingPtr example_ring();
twists::Endo example_sigma();

}  // namespace skewlab::pilab

#endif  // SKEWLAB_PILAB_REPLAY_HPP
