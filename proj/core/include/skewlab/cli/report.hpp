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

#ifndef SKEWLAB_CLI_REPORT_HPP
#define SKEWLAB_CLI_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewlab/cli/scenario.hpp"

namespace skewlab::cli {

inline constexpr std::string_view kReportSchema = "skewlab-report/1";

struct RunRecord {
  std::size_t index = 0;
  std::string op;
  nlohmann::json inputs;
  std::uint64_t seed = 0;  // effective seed
  std::string status;  // ok | error
  std::string verdict;
  nlohmann::json witnesses = nlohmann::json::object();
  std::string display;
  bool pass = false;
  std::optional<std::string> error_code;
  std::optional<std::string> error_message;
  std::optional<double> seconds;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct InputDiagnostic {
  std::string code;
  std::string message;
  std::string pointer;
  std::optional<std::size_t> line;
  std::optional<std::size_t> column;

  friend bool operator==(const InputDiagnostic&, const InputDiagnostic&) = default;
};

struct Report {
  std::string schema{kReportSchema};
  std::string command;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::vector<RunRecord> records;
  std::optional<InputDiagnostic> input_error;
  bool pass = true;
  std::optional<double> seconds;

  friend bool operator==(const Report&, const Report&) = default;
};

/// 0 pass, 2 analysis failure, 3 input error.
int exit_code(const Report& report);

nlohmann::json to_json(const Report& report);
/// Throws SyntaxError when `j` does not follow the report schema.
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

struct Flags {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string format = "text";  // text | json
  std::optional<std::string> out;
  bool parallel = false;
  bool timing = false;
};

inline constexpr std::string_view kCommands[] = {"validate", "decompose", "center", "pi-search", "pipeline", "replay"};

/// Runs every request of the command's category in `scenario`.  The validate
/// command also checks each declared twist.
Report run_command(std::string_view command, const Scenario& scenario, const Flags& flags);

/// Replays the given ids (empty: the fixture suite).
Report run_replays(const std::vector<std::string>& ids, const Flags& flags);

/// Full invocation: `target` is a scenario path, or for replay an id or "all".
/// Writes the report to `out` (or flags.out) and diagnostics to `err`.
int execute(std::string_view command, std::string_view target, const Flags& flags, std::ostream& out,
            std::ostream& err);

}  // namespace skewlab::cli

#endif  // SKEWLAB_CLI_REPORT_HPP
