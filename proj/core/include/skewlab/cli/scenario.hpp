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

#ifndef SKEWLAB_CLI_SCENARIO_HPP
#define SKEWLAB_CLI_SCENARIO_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewlab/error.hpp"
#include "skewlab/ore/orepoly.hpp"

namespace skewlab::cli {

/// A scenario input error: syntax errors carry line/column, semantic errors a
/// JSON pointer to the offending value.
class InputError : public Error {
 public:
  InputError(Errc code, const std::string& message, std::string pointer, std::optional<std::size_t> line = {},
             std::optional<std::size_t> column = {})
      : Error(code, locate(message, pointer, line, column)),
        pointer_(std::move(pointer)),
        line_(line),
        column_(column),
        detail_(message) {}

  const std::string& pointer() const noexcept { return pointer_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

  /// "message (line L, column C) at /pointer", omitting absent parts.
  static std::string locate(const std::string& message, const std::string& pointer, std::optional<std::size_t> line,
                            std::optional<std::size_t> column);

 private:
  std::string pointer_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
  std::string detail_;
};

struct TwistEntry {
  std::string name;
  std::string ring;
  twists::Endo sigma;
  twists::SigmaDeriv delta;
  ore::ContextPtr context;
};

struct RunSettings {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

struct RunOutcome {
  std::string verdict;
  nlohmann::json witnesses = nlohmann::json::object();
  std::string display;
  bool pass = true;
};

struct PreparedRun {
  std::size_t index = 0;
  std::string op;
  std::string category;  // validate | center | decompose | pi-search | pipeline | replay
  nlohmann::json inputs;
  std::optional<std::string> expect;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::function<RunOutcome(const RunSettings&)> execute;
};

struct Scenario {
  std::map<std::string, rings::RingPtr> rings;
  std::map<std::string, TwistEntry> twists;
  std::vector<PreparedRun> runs;
  /// Normalized form: rings and twists keyed by name, runs in order.
  nlohmann::json echo;
};

/// Throws InputError (SyntaxError, UnknownKind, DanglingReference, BadLiteral,
/// or the construction error of a ring or twist).
Scenario parse_scenario(std::string_view text);

/// Category of an operation name, or nullopt if unknown.
std::optional<std::string> op_category(std::string_view op);

}  // namespace skewlab::cli

#endif  // SKEWLAB_CLI_SCENARIO_HPP
