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

#include "skewlab/cli/scenario.hpp"

#include <algorithm>
#include <set>

#include "ops.hpp"
#include "skewlab/rings/catalog.hpp"

namespace skewlab::cli {

using nlohmann::json;
using rings::RingPtr;
using rings::RingSpec;
using rings::ScalarField;

std::string InputError::locate(const std::string& message, const std::string& pointer,
                               std::optional<std::size_t> line, std::optional<std::size_t> column) {
  std::string out = message;
  if (line) out += " (line " + std::to_string(*line) + ", column " + std::to_string(column.value_or(0)) + ")";
  if (!pointer.empty()) out += " at " + pointer;
  return out;
}

namespace {

std::string child(const std::string& pointer, std::string_view key) {
  // RFC 6901 escaping for keys that name rings and twists.
  std::string out = pointer + "/";
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

[[noreturn]] void syntax(const std::string& message, const std::string& pointer) {
  throw InputError(Errc::SyntaxError, message, pointer);
}

const json& expect_object(const json& j, const std::string& pointer) {
  if (!j.is_object()) syntax("expected an object", pointer);
  return j;
}

std::string get_string(const json& obj, std::string_view key, const std::string& pointer) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) syntax("missing field '" + std::string(key) + "'", pointer);
  if (!it->is_string()) syntax("expected a string", child(pointer, key));
  return it->get<std::string>();
}

std::optional<std::string> opt_string(const json& obj, std::string_view key, const std::string& pointer) {
  if (!obj.contains(std::string(key))) return std::nullopt;
  return get_string(obj, key, pointer);
}

std::optional<std::uint64_t> opt_uint(const json& obj, std::string_view key, const std::string& pointer) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) return std::nullopt;
  if (!it->is_number_unsigned()) syntax("expected a non-negative integer", child(pointer, key));
  return it->get<std::uint64_t>();
}

std::vector<std::string> string_array(const json& obj, std::string_view key, const std::string& pointer) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) return {};
  const std::string p = child(pointer, key);
  if (!it->is_array()) syntax("expected an array of strings", p);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) syntax("expected a string", child(p, i));
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

std::vector<std::uint64_t> uint_array(const json& obj, std::string_view key, const std::string& pointer) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) return {};
  const std::string p = child(pointer, key);
  if (!it->is_array()) syntax("expected an array of integers", p);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_number_unsigned()) syntax("expected a non-negative integer", child(p, i));
    out.push_back((*it)[i].get<std::uint64_t>());
  }
  return out;
}

ScalarField parse_field(const std::string& name, const std::string& pointer) {
  if (name == "Q") return ScalarField::rationals();
  if (name == "Q(i)") return ScalarField::gaussian();
  if (name.rfind("F_", 0) == 0 && name.size() > 2 &&
      std::all_of(name.begin() + 2, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() < 14) {
    return detail::at_pointer(pointer, [&] { return ScalarField::prime(std::stoull(name.substr(2))); });
  }
  throw InputError(Errc::UnknownKind, "unknown field '" + name + "'", pointer);
}

// Entries may be given as an object keyed by name or as an array of objects
// with an optional "name" (default: the array index).
struct Entry {
  std::string name;
  const json* value;
  std::string pointer;
};

std::vector<Entry> named_entries(const json& section, const std::string& pointer) {
  std::vector<Entry> out;
  std::set<std::string> seen;
  auto add = [&](std::string name, const json& v, std::string p) {
    if (!seen.insert(name).second) syntax("duplicate name '" + name + "'", p);
    out.push_back({std::move(name), &v, std::move(p)});
  };
  if (section.is_object()) {
    for (const auto& [k, v] : section.items()) add(k, v, child(pointer, k));
  } else if (section.is_array()) {
    for (std::size_t i = 0; i < section.size(); ++i) {
      const std::string p = child(pointer, i);
      expect_object(section[i], p);
      std::string name = std::to_string(i);
      if (section[i].contains("name")) name = get_string(section[i], "name", p);
      add(std::move(name), section[i], p);
    }
  } else {
    syntax("expected an object or an array", pointer);
  }
  return out;
}

json without_name(const json& j) {
  json out = j;
  if (out.is_object()) out.erase("name");
  return out;
}

// ---------------------------------------------------------------------------

class RingTable {
 public:
  explicit RingTable(const std::vector<Entry>& entries) {
    for (const Entry& e : entries) defs_.emplace(e.name, e);
  }

  RingPtr get(const std::string& name, const std::string& ref_pointer) {
    if (const auto it = built_.find(name); it != built_.end()) return it->second;
    const auto def = defs_.find(name);
    if (def == defs_.end()) throw InputError(Errc::DanglingReference, "unknown ring '" + name + "'", ref_pointer);
    if (!active_.insert(name).second) {
      throw InputError(Errc::DanglingReference, "ring '" + name + "' refers to itself", ref_pointer);
    }
    RingPtr r = build(*def->second.value, def->second.pointer);
    active_.erase(name);
    built_.emplace(name, r);
    return r;
  }

  /// A ring reference: a name or an inline ring object.
  RingPtr ref(const json& j, const std::string& pointer) {
    if (j.is_string()) return get(j.get<std::string>(), pointer);
    return build(j, pointer);
  }

  const std::map<std::string, RingPtr>& built() const { return built_; }

 private:
  RingPtr build(const json& j, const std::string& pointer) {
    expect_object(j, pointer);
    const std::string kind = get_string(j, "kind", pointer);
    const std::string kp = child(pointer, "kind");
    RingSpec spec;
    const std::string field_name = opt_string(j, "field", pointer).value_or("Q");
    spec.field = parse_field(field_name, child(pointer, "field"));
    if (kind == "field") {
      spec.kind = rings::RingKind::Field;
    } else if (kind == "polynomial") {
      spec.kind = rings::RingKind::Polynomial;
      spec.variables = string_array(j, "variables", pointer);
      if (spec.variables.empty()) syntax("a polynomial ring needs variables", child(pointer, "variables"));
      for (std::uint64_t b : uint_array(j, "truncation", pointer)) {
        if (b > 64) syntax("truncation exponent out of range", child(pointer, "truncation"));
        spec.truncation.push_back(static_cast<std::uint32_t>(b));
      }
      if (const auto it = j.find("unbounded"); it != j.end()) {
        if (!it->is_boolean()) syntax("expected a boolean", child(pointer, "unbounded"));
        spec.unbounded_family = it->get<bool>();
      }
    } else if (kind == "mixed") {
      spec.kind = rings::RingKind::Mixed;
      spec.constraint = get_string(j, "constraint", pointer);
    } else if (kind == "matrix" || kind == "constrained-matrix") {
      const auto size = opt_uint(j, "size", pointer);
      if (!size || *size == 0 || *size > 8) syntax("matrix size must be between 1 and 8", child(pointer, "size"));
      spec.size = *size;
      if (kind == "matrix") {
        spec.kind = rings::RingKind::Matrix;
        if (const auto it = j.find("base"); it != j.end()) spec.prebuilt.push_back(ref(*it, child(pointer, "base")));
      } else {
        spec.kind = rings::RingKind::ConstrainedMatrix;
        spec.constraints = string_array(j, "constraints", pointer);
        if (spec.constraints.size() != spec.size * spec.size) {
          syntax("expected size*size constraints in row-major order", child(pointer, "constraints"));
        }
      }
    } else if (kind == "product") {
      spec.kind = rings::RingKind::Product;
      const auto it = j.find("components");
      if (it == j.end() || !it->is_array() || it->empty()) {
        syntax("a product needs a nonempty components array", child(pointer, "components"));
      }
      for (std::size_t i = 0; i < it->size(); ++i) {
        spec.prebuilt.push_back(ref((*it)[i], child(child(pointer, "components"), i)));
      }
      if (j.contains("idempotents")) spec.idempotents = string_array(j, "idempotents", pointer);
    } else if (kind == "localization") {
      spec.kind = rings::RingKind::Localization;
      const auto it = j.find("base");
      if (it == j.end()) syntax("missing field 'base'", pointer);
      spec.prebuilt.push_back(ref(*it, child(pointer, "base")));
      spec.element = get_string(j, "element", pointer);
    } else {
      throw InputError(Errc::UnknownKind, "unknown ring kind '" + kind + "'", kp);
    }
    return detail::at_pointer(pointer, [&] { return rings::ring_make(spec); });
  }

  std::map<std::string, Entry> defs_;
  std::map<std::string, RingPtr> built_;
  std::set<std::string> active_;
};

// ---------------------------------------------------------------------------

const std::set<std::string> kEndoKinds = {"identity", "inner",         "variable-map", "shift",    "additive",
                                          "component-map", "conjugation", "power",      "localized"};
const std::set<std::string> kDerivKinds = {"zero", "inner", "partial", "componentwise"};

// Component indices are 1-based in scenario files.
std::vector<std::size_t> component_indices(const json& j, std::string_view key, const std::string& pointer) {
  std::vector<std::size_t> out;
  const auto raw = uint_array(j, key, pointer);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0 || raw[i] > 64) syntax("component indices start at 1", child(child(pointer, key), i));
    out.push_back(raw[i] - 1);
  }
  return out;
}

twists::EndoSpec endo_spec(const json& j, const std::string& pointer, RingTable& rings) {
  expect_object(j, pointer);
  twists::EndoSpec s;
  s.kind = get_string(j, "kind", pointer);
  if (!kEndoKinds.contains(s.kind)) {
    throw InputError(Errc::UnknownKind, "unknown endomorphism kind '" + s.kind + "'", child(pointer, "kind"));
  }
  s.u = opt_string(j, "u", pointer).value_or("");
  if (s.kind == "inner" && s.u.empty()) syntax("an inner endomorphism needs 'u'", pointer);
  if (const auto it = j.find("ambient"); it != j.end()) s.ambient = rings.ref(*it, child(pointer, "ambient"));
  s.images = string_array(j, "images", pointer);
  s.perm = component_indices(j, "perm", pointer);
  s.source = component_indices(j, "source", pointer);
  if (const auto it = j.find("maps"); it != j.end()) {
    if (!it->is_array()) syntax("expected an array", child(pointer, "maps"));
    for (std::size_t i = 0; i < it->size(); ++i) {
      s.maps.push_back(endo_spec((*it)[i], child(child(pointer, "maps"), i), rings));
    }
  }
  if (const auto it = j.find("of"); it != j.end()) s.maps.push_back(endo_spec(*it, child(pointer, "of"), rings));
  if (const auto e = opt_uint(j, "exponent", pointer)) {
    if (*e == 0 || *e > 1024) syntax("exponent must be between 1 and 1024", child(pointer, "exponent"));
    s.exponent = static_cast<std::uint32_t>(*e);
  }
  return s;
}

twists::DerivSpec deriv_spec(const json& j, const std::string& pointer) {
  expect_object(j, pointer);
  twists::DerivSpec s;
  s.kind = get_string(j, "kind", pointer);
  if (!kDerivKinds.contains(s.kind)) {
    throw InputError(Errc::UnknownKind, "unknown derivation kind '" + s.kind + "'", child(pointer, "kind"));
  }
  s.b = opt_string(j, "b", pointer).value_or("");
  if (s.kind == "inner" && s.b.empty()) syntax("an inner derivation needs 'b'", pointer);
  s.variable = opt_string(j, "variable", pointer).value_or("");
  if (s.kind == "partial" && s.variable.empty()) syntax("a formal derivative needs 'variable'", pointer);
  if (const auto it = j.find("parts"); it != j.end()) {
    if (!it->is_array()) syntax("expected an array", child(pointer, "parts"));
    for (std::size_t i = 0; i < it->size(); ++i) s.parts.push_back(deriv_spec((*it)[i], child(child(pointer, "parts"), i)));
  }
  return s;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based position of the last byte read.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::optional<std::string> op_category(std::string_view op) {
  for (const auto& info : detail::op_table()) {
    if (info.name == op) return std::string(info.category);
  }
  return std::nullopt;
}

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    const std::string what = e.what();
    const auto colon = what.find(": ");
    const std::string reason = colon == std::string::npos ? "" : ": " + what.substr(colon + 2);
    throw InputError(Errc::SyntaxError, "malformed JSON" + reason, "", line, column);
  }
  if (!root.is_object()) syntax("a scenario is a JSON object", "");
  for (const auto& [key, _] : root.items()) {
    if (key != "rings" && key != "twists" && key != "runs") syntax("unknown key '" + key + "'", child("", key));
  }

  Scenario sc;
  const json empty = json::object();
  const json& ring_section = root.contains("rings") ? root["rings"] : empty;
  const json& twist_section = root.contains("twists") ? root["twists"] : empty;
  const json run_section = root.contains("runs") ? root["runs"] : json::array();

  const auto ring_entries = named_entries(ring_section, "/rings");
  RingTable table(ring_entries);
  json ring_echo = json::object();
  for (const Entry& e : ring_entries) {
    table.get(e.name, e.pointer);
    ring_echo[e.name] = without_name(*e.value);
  }
  sc.rings = table.built();

  json twist_echo = json::object();
  for (const Entry& e : named_entries(twist_section, "/twists")) {
    const json& t = expect_object(*e.value, e.pointer);
    std::string ring_name;
    if (t.contains("ring")) {
      ring_name = get_string(t, "ring", e.pointer);
    } else if (ring_entries.size() == 1) {
      ring_name = ring_entries.front().name;
    } else {
      syntax("a twist needs 'ring' unless exactly one ring is declared", e.pointer);
    }
    const RingPtr ring = table.get(ring_name, child(e.pointer, "ring"));
    const auto sig_it = t.find("sigma");
    const json identity_spec = {{"kind", "identity"}};
    const json& sig_json = sig_it == t.end() ? identity_spec : *sig_it;
    const std::string sp = child(e.pointer, "sigma");
    const auto es = endo_spec(sig_json, sp, table);
    const twists::Endo sigma = detail::at_pointer(sp, [&] { return twists::endo_make(ring, es); });
    const json zero_spec = {{"kind", "zero"}};
    const auto del_it = t.find("delta");
    const json& del_json = del_it == t.end() ? zero_spec : *del_it;
    const std::string dp = child(e.pointer, "delta");
    const auto ds = deriv_spec(del_json, dp);
    const twists::SigmaDeriv delta = detail::at_pointer(dp, [&] { return twists::deriv_make(sigma, ds); });
    const std::string var = opt_string(t, "var", e.pointer).value_or("");
    auto ctx = detail::at_pointer(e.pointer, [&] { return ore::OreContext::make(sigma, delta, var); });
    sc.twists.emplace(e.name, TwistEntry{e.name, ring_name, sigma, delta, ctx});
    json echo = {{"ring", ring_name}, {"sigma", sig_json}, {"delta", del_json}, {"var", ctx->var()}};
    twist_echo[e.name] = echo;
  }
  sc.rings = table.built();

  if (!run_section.is_array()) syntax("expected an array", "/runs");
  json run_echo = json::array();
  sc.runs.reserve(run_section.size());
  for (std::size_t i = 0; i < run_section.size(); ++i) {
    const std::string p = child("/runs", i);
    const json& r = expect_object(run_section[i], p);
    PreparedRun run;
    run.index = i;
    run.op = get_string(r, "op", p);
    const auto info = std::find_if(detail::op_table().begin(), detail::op_table().end(),
                                   [&](const detail::OpInfo& o) { return o.name == run.op; });
    if (info == detail::op_table().end()) {
      throw InputError(Errc::UnknownKind, "unknown operation '" + run.op + "'", child(p, "op"));
    }
    run.category = std::string(info->category);
    run.inputs = r;
    run.expect = opt_string(r, "expect", p);
    run.seed = opt_uint(r, "seed", p);
    run.budget = opt_uint(r, "budget", p);
    const detail::OpInput in{sc, r, p};
    run.execute = detail::at_pointer(p, [&] { return info->prepare(in); });
    sc.runs.push_back(std::move(run));
    run_echo.push_back(r);
  }

  sc.echo = {{"rings", ring_echo}, {"twists", twist_echo}, {"runs", run_echo}};
  return sc;
}

}  // namespace skewlab::cli
