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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "skewlab/cli/report.hpp"

#ifndef SKEWLAB_TEST_DATA
#error "SKEWLAB_TEST_DATA must name the tests directory"
#endif

namespace {

using namespace skewlab;
using namespace skewlab::cli;
using nlohmann::json;

const char* kExampleRing = R"js("A": {"kind": "constrained-matrix", "size": 2,
                                    "constraints": ["Z+xQ[x]", "Z+xQ[x]", "xQ[x]", "Z+xQ[x]"]})js";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& rel) { return std::string(SKEWLAB_TEST_DATA) + "/" + rel; }

InputError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const InputError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return InputError(Errc::SyntaxError, "", "");
}

TEST(ScenarioParse, MinimalMatrixScenario) {
  const auto sc = parse_scenario(R"js({
    "rings": {"M": {"kind": "matrix", "size": 2, "field": "Q"}},
    "twists": {"T": {"ring": "M", "sigma": {"kind": "identity"}}},
    "runs": [{"op": "is_central", "twist": "T", "f": "x"}]
  })js");
  EXPECT_EQ(sc.rings.size(), 1u);
  ASSERT_EQ(sc.runs.size(), 1u);
  EXPECT_EQ(sc.runs[0].category, "center");
  EXPECT_EQ(sc.runs[0].execute({0, std::nullopt}).verdict, "central");
}

TEST(ScenarioParse, ExampleRingTwistArray) {
  const auto sc = parse_scenario(std::string(R"js({"rings": {)js") + kExampleRing +
                                 R"js(}, "twists": [{"sigma": {"kind": "inner", "u": "diag(1,2)"}}], "runs": []})js");
  ASSERT_EQ(sc.twists.size(), 1u);
  const auto& t = sc.twists.begin()->second;
  EXPECT_EQ(t.ring, "A");
  EXPECT_EQ(t.context->var(), "y");
  Flags flags;
  const auto rep = run_command("validate", sc, flags);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].verdict, "valid");
  EXPECT_EQ(rep.records[0].witnesses["injective"], "true");
  EXPECT_EQ(exit_code(rep), 0);
}

TEST(ScenarioParse, DanglingRingNamed) {
  const auto e = parse_error(R"js({"rings": {}, "twists": {"T": {"ring": "R9"}}, "runs": []})js");
  EXPECT_EQ(e.code(), Errc::DanglingReference);
  EXPECT_NE(std::string(e.what()).find("R9"), std::string::npos);
  EXPECT_EQ(e.pointer(), "/twists/T/ring");
  const auto r = parse_error(R"js({"rings": {"M": {"kind": "matrix", "size": 2}},
    "runs": [{"op": "identity_search", "ring": "R9", "identity": "S_3"}]})js");
  EXPECT_EQ(r.code(), Errc::DanglingReference);
  EXPECT_NE(std::string(r.what()).find("R9"), std::string::npos);
}

TEST(ScenarioParse, SyntaxErrorHasPosition) {
  const auto e = parse_error("{\n  \"rings\": {\n    \"M\": {\"kind\": \"matrix\",, \"size\": 2}\n  }\n}");
  EXPECT_EQ(e.code(), Errc::SyntaxError);
  ASSERT_TRUE(e.line());
  EXPECT_EQ(*e.line(), 3u);
  ASSERT_TRUE(e.column());
  EXPECT_GT(*e.column(), 20u);
}

TEST(ScenarioParse, UnknownKindsAndLiterals) {
  EXPECT_EQ(parse_error(R"js({"rings": {"M": {"kind": "octonion"}}})js").code(), Errc::UnknownKind);
  EXPECT_EQ(parse_error(R"js({"rings": {"M": {"kind": "matrix", "size": 2}},
    "twists": {"T": {"sigma": {"kind": "frobenius"}}}})js").code(), Errc::UnknownKind);
  EXPECT_EQ(parse_error(R"js({"runs": [{"op": "teleport"}]})js").code(), Errc::UnknownKind);
  const auto lit = parse_error(R"js({"rings": {"M": {"kind": "matrix", "size": 2}},
    "twists": {"T": {}}, "runs": [{"op": "is_central", "f": "E13*x"}]})js");
  EXPECT_EQ(lit.code(), Errc::BadLiteral);
  EXPECT_EQ(lit.pointer(), "/runs/0/f");
  EXPECT_EQ(parse_error(R"js({"rings": {"P": {"kind": "product", "components": ["P"]}}})js").code(),
            Errc::DanglingReference);
  EXPECT_EQ(parse_error(R"js({"rings": {}, "extra": 1})js").code(), Errc::SyntaxError);
}

TEST(ScenarioParse, ConstructionErrorsCarryPointer) {
  const auto e = parse_error(R"js({"rings": {"M": {"kind": "matrix", "size": 2}},
    "twists": {"T": {"sigma": {"kind": "inner", "u": "E12"}}}})js");
  EXPECT_EQ(e.code(), Errc::WitnessNotInvertible);
  EXPECT_EQ(e.pointer(), "/twists/T/sigma");
}

TEST(ScenarioParse, EchoRoundTrip) {
  const std::string text = read_file(data("scenarios/center.json"));
  const auto a = parse_scenario(text);
  const auto b = parse_scenario(a.echo.dump());
  EXPECT_EQ(a.echo, b.echo);
  EXPECT_EQ(a.runs.size(), b.runs.size());
}

TEST(RunCommand, BundledScenarios) {
  Flags flags;
  const auto center = run_command("center", parse_scenario(read_file(data("scenarios/center.json"))), flags);
  EXPECT_EQ(exit_code(center), 0);
  ASSERT_GE(center.records.size(), 1u);
  EXPECT_EQ(center.records[0].verdict, "not-central");

  const auto search = run_command("pi-search", parse_scenario(read_file(data("scenarios/pi_search.json"))), flags);
  EXPECT_EQ(exit_code(search), 0);
  EXPECT_EQ(search.records[0].verdict, "counterexample");

  const auto replay = run_replays({"ex-2.1"}, flags);
  EXPECT_EQ(exit_code(replay), 0);
  EXPECT_EQ(replay.records[0].witnesses["checks"].size(), 5u);
}

TEST(RunCommand, EmptyScenario) {
  const auto rep = run_command("center", parse_scenario(R"js({"rings": {}, "twists": {}, "runs": []})js"), {});
  EXPECT_TRUE(rep.records.empty());
  EXPECT_EQ(exit_code(rep), 0);
  EXPECT_EQ(report_from_json(json::parse(render_json(rep))), rep);
}

TEST(RunCommand, ExpectationsDecidePass) {
  const auto sc = parse_scenario(R"js({
    "rings": {"P": {"kind": "polynomial", "variables": ["y1", "y2"], "unbounded": true}},
    "twists": {"S": {"sigma": {"kind": "shift"}}},
    "runs": [{"op": "pi_decide_pipeline", "expect": "OutOfCatalog"},
             {"op": "pi_decide_pipeline"},
             {"op": "kernel_chain", "expect": "stabilized"}]
  })js");
  const auto pipe = run_command("pipeline", sc, {});
  ASSERT_EQ(pipe.records.size(), 2u);
  EXPECT_TRUE(pipe.records[0].pass);
  EXPECT_FALSE(pipe.records[1].pass);
  EXPECT_EQ(*pipe.records[1].error_code, "OutOfCatalog");
  EXPECT_EQ(exit_code(pipe), 2);
  const auto dec = run_command("decompose", sc, {});
  EXPECT_EQ(dec.records[0].verdict, "not-stabilized");
  EXPECT_FALSE(dec.records[0].pass);
}

TEST(RunCommand, FailedValidationIsAnalysisFailure) {
  const auto sc = parse_scenario(R"js({
    "rings": {"P": {"kind": "polynomial", "variables": ["y1", "y2"]}},
    "twists": {"bad": {"sigma": {"kind": "additive", "images": ["y1 + 1", "y2"]}}}
  })js");
  const auto rep = run_command("validate", sc, {});
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].verdict, "invalid");
  EXPECT_EQ(exit_code(rep), 2);
}

TEST(Report, JsonRoundTrip) {
  Flags flags;
  flags.timing = true;
  const auto rep = run_command("center", parse_scenario(read_file(data("scenarios/center.json"))), flags);
  ASSERT_TRUE(rep.seconds);
  const auto back = report_from_json(json::parse(render_json(rep)));
  EXPECT_EQ(back, rep);
  EXPECT_THROW(report_from_json(json{{"schema", "other/1"}}), Error);
}

TEST(Report, TimingIsOptIn) {
  const auto rep = run_replays({"ex-4.8-truncated-shift(1)"}, {});
  EXPECT_FALSE(rep.seconds);
  EXPECT_FALSE(to_json(rep).contains("seconds"));
  EXPECT_EQ(report_from_json(to_json(rep)), rep);
}

TEST(Report, TextRenderingIsStable) {
  const auto rep = run_replays({"ex-4.8-truncated-shift(2)"}, {});
  const std::string text = render_text(rep);
  EXPECT_EQ(text, render_text(run_replays({"ex-4.8-truncated-shift(2)"}, {})));
  EXPECT_NE(text.find("overall: PASS"), std::string::npos);
}

TEST(Golden, TruncatedShiftTwoJson) {
  std::ostringstream out;
  std::ostringstream err;
  Flags flags;
  flags.format = "json";
  EXPECT_EQ(execute("replay", "ex-4.8-truncated-shift(2)", flags, out, err), 0);
  EXPECT_EQ(out.str(), read_file(data("golden/replay_truncated_shift_2.json")));
}

TEST(Determinism, SuiteTwiceByteIdentical) {
  Flags flags;
  flags.format = "json";
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  EXPECT_EQ(execute("replay", "all", flags, a, err), 0);
  EXPECT_EQ(execute("replay", "all", flags, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
  flags.parallel = true;
  std::ostringstream c;
  EXPECT_EQ(execute("replay", "all", flags, c, err), 0);
  EXPECT_EQ(a.str(), c.str());
}

TEST(Execute, ExitCodes) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(execute("center", data("scenarios/does_not_exist.json"), {}, out, err), 3);
  EXPECT_EQ(execute("center", data("scenarios/malformed.json"), {}, out, err), 3);
  EXPECT_EQ(execute("replay", "ex-0.0", {}, out, err), 3);
  EXPECT_EQ(execute("fly", "x", {}, out, err), 3);
  EXPECT_EQ(execute("pipeline", data("scenarios/failing.json"), {}, out, err), 2);
  EXPECT_EQ(execute("center", data("scenarios/center.json"), {}, out, err), 0);
  Flags bad;
  bad.format = "xml";
  EXPECT_EQ(execute("center", data("scenarios/center.json"), bad, out, err), 3);
}

TEST(Execute, SeedIsEchoed) {
  Flags flags;
  flags.seed = 17;
  const auto rep = run_replays({"ex-4.8-truncated-shift(1)"}, flags);
  EXPECT_EQ(rep.seed, 17u);
  EXPECT_EQ(rep.records[0].seed, 17u);
  EXPECT_EQ(rep.records[0].witnesses["seed"], 17);
}

}  // namespace
