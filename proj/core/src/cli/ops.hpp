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

#ifndef SKEWLAB_CLI_OPS_HPP
#define SKEWLAB_CLI_OPS_HPP

#include <span>
#include <string>
#include <string_view>

#include "skewlab/cli/scenario.hpp"

namespace skewlab::cli::detail {

struct OpInput {
  const Scenario& scenario;
  const nlohmann::json& run;
  std::string pointer;  // "/runs/<i>"
};

using Executor = std::function<RunOutcome(const RunSettings&)>;

struct OpInfo {
  std::string_view name;
  std::string_view category;
  Executor (*prepare)(const OpInput&);
};

std::span<const OpInfo> op_table();

/// Rethrows any skewlab::Error raised by `fn` as an InputError at `pointer`.
template <class Fn>
auto at_pointer(const std::string& pointer, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.code(), e.message(), pointer);
  }
}

}  // namespace skewlab::cli::detail

#endif  // SKEWLAB_CLI_OPS_HPP
