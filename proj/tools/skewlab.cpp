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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skewlab/cli/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"skewlab: Ore extension experiments driven by scenario files"};
  skewlab::cli::Flags flags;
  std::string command;
  std::string target;
  std::uint64_t budget = 0;

  app.add_option("command", command, "validate | decompose | center | pi-search | pipeline | replay")
      ->required()
      ->check(CLI::IsMember({"validate", "decompose", "center", "pi-search", "pipeline", "replay"}));
  app.add_option("target", target, "scenario file; for replay also an example id or 'all'")->required();
  auto* budget_opt = app.add_option("--budget", budget, "search and replay budget");
  app.add_option("--seed", flags.seed, "seed for sampled evidence (default 0)");
  app.add_option("--format", flags.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", flags.out, "write the report to PATH");
  app.add_flag("--parallel", flags.parallel, "run independent requests concurrently");
  app.add_flag("--timing", flags.timing, "record wall-clock seconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  if (budget_opt->count() > 0) flags.budget = budget;
  return skewlab::cli::execute(command, target, flags, std::cout, std::cerr);
}
