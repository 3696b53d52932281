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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "ops.hpp"
#include "skewlab/cli/report.hpp"
#include "skewlab/pilab/replay.hpp"

namespace skewlab::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Job {
  std::size_t index;
  std::string op;
  json inputs;
  std::optional<std::string> expect;
  RunSettings settings;
  std::function<RunOutcome(const RunSettings&)> execute;
};

RunRecord run_job(const Job& job, bool timing) {
  RunRecord rec;
  rec.index = job.index;
  rec.op = job.op;
  rec.inputs = job.inputs;
  rec.seed = job.settings.seed;
  const auto start = Clock::now();
  bool ok = true;
  try {
    RunOutcome o = job.execute(job.settings);
    rec.status = "ok";
    rec.verdict = std::move(o.verdict);
    rec.witnesses = std::move(o.witnesses);
    rec.display = std::move(o.display);
    ok = o.pass;
  } catch (const Error& e) {
    rec.status = "error";
    rec.verdict = "error";
    rec.error_code = std::string(errc_name(e.code()));
    rec.error_message = e.message();
    ok = false;
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.verdict = "error";
    rec.error_code = "Internal";
    rec.error_message = e.what();
    ok = false;
  }
  if (job.expect) {
    rec.pass = *job.expect == rec.verdict || (rec.error_code && *job.expect == *rec.error_code);
  } else {
    rec.pass = ok;
  }
  if (timing) rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

Report run_jobs(std::string command, const std::vector<Job>& jobs, const Flags& flags) {
  const auto start = Clock::now();
  Report rep;
  rep.command = std::move(command);
  rep.seed = flags.seed;
  rep.budget = flags.budget;
  if (flags.parallel && jobs.size() > 1) {
    std::vector<std::future<RunRecord>> futures;
    futures.reserve(jobs.size());
    for (const Job& j : jobs) futures.push_back(std::async(std::launch::async, run_job, std::cref(j), flags.timing));
    for (auto& f : futures) rep.records.push_back(f.get());
  } else {
    for (const Job& j : jobs) rep.records.push_back(run_job(j, flags.timing));
  }
  rep.pass = std::all_of(rep.records.begin(), rep.records.end(), [](const RunRecord& r) { return r.pass; });
  if (flags.timing) rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

Report input_error_report(std::string_view command, const Flags& flags, const Error& e) {
  Report rep;
  rep.command = std::string(command);
  rep.seed = flags.seed;
  rep.budget = flags.budget;
  rep.pass = false;
  InputDiagnostic d{std::string(errc_name(e.code())), e.message(), "", std::nullopt, std::nullopt};
  if (const auto* ie = dynamic_cast<const InputError*>(&e)) {
    d.message = ie->detail();
    d.pointer = ie->pointer();
    d.line = ie->line();
    d.column = ie->column();
  }
  rep.input_error = std::move(d);
  return rep;
}

bool known_command(std::string_view command) {
  return std::find(std::begin(kCommands), std::end(kCommands), command) != std::end(kCommands);
}

}  // namespace

Report run_command(std::string_view command, const Scenario& scenario, const Flags& flags) {
  if (!known_command(command)) throw Error(Errc::UnknownKind, "unknown command '" + std::string(command) + "'");
  std::vector<Job> jobs;
  std::size_t next = 0;
  if (command == "validate") {
    // Every declared twist is validated before the explicit validate runs.
    for (const auto& [name, entry] : scenario.twists) {
      const json inputs = {{"op", "validate"}, {"twist", name}};
      const detail::OpInput in{scenario, inputs, "/twists/" + name};
      auto exec = detail::op_table().front().prepare(in);
      jobs.push_back({next++, "validate", inputs, std::nullopt, {flags.seed, flags.budget}, std::move(exec)});
    }
  }
  for (const PreparedRun& run : scenario.runs) {
    if (run.category != command) continue;
    RunSettings s{run.seed.value_or(flags.seed), run.budget ? run.budget : flags.budget};
    jobs.push_back({next++, run.op, run.inputs, run.expect, s, run.execute});
  }
  return run_jobs(std::string(command), jobs, flags);
}

Report run_replays(const std::vector<std::string>& ids, const Flags& flags) {
  const std::vector<std::string> list = ids.empty() ? pilab::replay_suite() : ids;
  std::vector<Job> jobs;
  const Scenario empty;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json inputs = {{"op", "replay"}, {"id", list[i]}};
    const detail::OpInput in{empty, inputs, ""};
    const auto& info = *std::find_if(detail::op_table().begin(), detail::op_table().end(),
                                     [](const detail::OpInfo& o) { return o.name == "replay"; });
    jobs.push_back({i, "replay", inputs, std::nullopt, {flags.seed, flags.budget}, info.prepare(in)});
  }
  return run_jobs("replay", jobs, flags);
}

int execute(std::string_view command, std::string_view target, const Flags& flags, std::ostream& out,
            std::ostream& err) {
  if (!known_command(command)) {
    err << "skewlab: unknown command '" << command << "'\n";
    return 3;
  }
  if (flags.format != "text" && flags.format != "json") {
    err << "skewlab: unknown format '" << flags.format << "' (expected text or json)\n";
    return 3;
  }
  Report rep;
  try {
    const std::string t(target);
    if (command == "replay" && (t == "all" || t.rfind("ex-", 0) == 0)) {
      rep = run_replays(t == "all" ? std::vector<std::string>{} : std::vector<std::string>{t}, flags);
      // Unknown ids are input errors rather than failed runs.
      if (t != "all" && rep.records.front().error_code == std::string(errc_name(Errc::UnknownExample))) {
        throw Error(Errc::UnknownExample, *rep.records.front().error_message);
      }
    } else {
      std::ifstream in(t, std::ios::binary);
      if (!in) throw Error(Errc::IoError, "cannot read scenario file");
      std::ostringstream text;
      text << in.rdbuf();
      const Scenario sc = parse_scenario(text.str());
      rep = run_command(command, sc, flags);
    }
  } catch (const Error& e) {
    rep = input_error_report(command, flags, e);
  }

  const std::string body = flags.format == "json" ? render_json(rep) : render_text(rep);
  if (flags.out) {
    std::ofstream f(*flags.out, std::ios::binary | std::ios::trunc);
    if (!(f << body)) {
      err << "skewlab: IoError: cannot write report\n";
      return 3;
    }
  } else {
    out << body;
  }
  if (rep.input_error) {
    const InputDiagnostic& d = *rep.input_error;
    err << "skewlab: " << d.code << ": " << InputError::locate(d.message, d.pointer, d.line, d.column) << "\n";
  }
  return exit_code(rep);
}

}  // namespace skewlab::cli
