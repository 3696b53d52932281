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

#include <sstream>

#include "skewlab/cli/report.hpp"

namespace skewlab::cli {

using nlohmann::json;

int exit_code(const Report& report) {
  if (report.input_error) return 3;
  return report.pass ? 0 : 2;
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::SyntaxError, "report: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing '") + key + "'");
  return *it;
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("bad value for '") + key + "'");
  }
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return get<T>(j, key);
}

json record_json(const RunRecord& r) {
  json j = {{"index", r.index},
            {"op", r.op},
            {"inputs", r.inputs},
            {"seed", r.seed},
            {"status", r.status},
            {"verdict", r.verdict},
            {"witnesses", r.witnesses},
            {"display", r.display},
            {"pass", r.pass},
            {"error_code", opt(r.error_code)},
            {"error_message", opt(r.error_message)}};
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

RunRecord record_from(const json& j) {
  RunRecord r;
  r.index = get<std::size_t>(j, "index");
  r.op = get<std::string>(j, "op");
  r.inputs = field(j, "inputs");
  r.seed = get<std::uint64_t>(j, "seed");
  r.status = get<std::string>(j, "status");
  r.verdict = get<std::string>(j, "verdict");
  r.witnesses = field(j, "witnesses");
  r.display = get<std::string>(j, "display");
  r.pass = get<bool>(j, "pass");
  r.error_code = get_opt<std::string>(j, "error_code");
  r.error_message = get_opt<std::string>(j, "error_message");
  if (j.contains("seconds")) r.seconds = get<double>(j, "seconds");
  return r;
}

json diagnostic_json(const InputDiagnostic& d) {
  return {{"code", d.code}, {"message", d.message}, {"pointer", d.pointer}, {"line", opt(d.line)},
          {"column", opt(d.column)}};
}

InputDiagnostic diagnostic_from(const json& j) {
  return {get<std::string>(j, "code"), get<std::string>(j, "message"), get<std::string>(j, "pointer"),
          get_opt<std::size_t>(j, "line"), get_opt<std::size_t>(j, "column")};
}

}  // namespace

json to_json(const Report& report) {
  json records = json::array();
  for (const RunRecord& r : report.records) records.push_back(record_json(r));
  json j = {{"schema", report.schema},
            {"command", report.command},
            {"seed", report.seed},
            {"budget", opt(report.budget)},
            {"records", records},
            {"input_error", report.input_error ? diagnostic_json(*report.input_error) : json(nullptr)},
            {"pass", report.pass}};
  if (report.seconds) j["seconds"] = *report.seconds;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema = get<std::string>(j, "schema");
  if (r.schema != kReportSchema) bad("unsupported schema '" + r.schema + "'");
  r.command = get<std::string>(j, "command");
  r.seed = get<std::uint64_t>(j, "seed");
  r.budget = get_opt<std::uint64_t>(j, "budget");
  const json& records = field(j, "records");
  if (!records.is_array()) bad("records must be an array");
  for (const json& rec : records) r.records.push_back(record_from(rec));
  if (!field(j, "input_error").is_null()) r.input_error = diagnostic_from(j["input_error"]);
  r.pass = get<bool>(j, "pass");
  if (j.contains("seconds")) r.seconds = get<double>(j, "seconds");
  return r;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "skewlab " << report.command << " (" << report.schema << ", seed " << report.seed;
  if (report.budget) os << ", budget " << *report.budget;
  os << ")\n";
  if (report.input_error) {
    const InputDiagnostic& d = *report.input_error;
    os << "input error: " << d.code << ": " << d.message;
    if (d.line) os << " (line " << *d.line << ", column " << d.column.value_or(0) << ")";
    if (!d.pointer.empty()) os << " at " << d.pointer;
    os << "\n";
  }
  for (const RunRecord& r : report.records) {
    os << "[" << r.index << "] " << r.op << ": " << r.verdict << (r.pass ? " PASS" : " FAIL");
    if (r.seconds) os << " (" << *r.seconds << " s)";
    os << "\n";
    if (!r.display.empty()) os << "    " << r.display << "\n";
    if (r.error_code) os << "    " << *r.error_code << ": " << r.error_message.value_or("") << "\n";
  }
  std::size_t passed = 0;
  for (const RunRecord& r : report.records) passed += r.pass ? 1 : 0;
  os << "overall: " << (report.input_error ? "INPUT ERROR" : report.pass ? "PASS" : "FAIL") << " (" << passed
     << "/" << report.records.size() << " runs pass)\n";
  return os.str();
}

}  // namespace skewlab::cli
