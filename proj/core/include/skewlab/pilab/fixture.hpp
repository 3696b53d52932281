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

#ifndef SKEWLAB_PILAB_FIXTURE_HPP
#define SKEWLAB_PILAB_FIXTURE_HPP

#include <string_view>

namespace skewlab::pilab {

/// Contents of the versioned replay expectation table (core/data/replays.json).
std::string_view replay_fixture_text();

}  // namespace skewlab::pilab

#endif  // SKEWLAB_PILAB_FIXTURE_HPP
