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

#include "ops.hpp"

#include <algorithm>

#include "skewlab/centerlab/centerlab.hpp"
#include "skewlab/pilab/identities.hpp"
#include "skewlab/pilab/replay.hpp"

namespace skewlab::cli::detail {

using nlohmann::json;
using ore::OrePoly;
using rings::Ring;
using rings::RingPtr;
using rings::Value;

namespace {

bool has(const OpInput& in, std::string_view key) { return in.run.contains(std::string(key)); }

std::string field_pointer(const OpInput& in, std::string_view key) { return in.pointer + "/" + std::string(key); }

const json& require(const OpInput& in, std::string_view key) {
  const auto it = in.run.find(std::string(key));
  if (it == in.run.end()) throw InputError(Errc::SyntaxError, "missing field '" + std::string(key) + "'", in.pointer);
  return *it;
}

std::string string_field(const OpInput& in, std::string_view key) {
  const json& v = require(in, key);
  if (!v.is_string()) throw InputError(Errc::SyntaxError, "expected a string", field_pointer(in, key));
  return v.get<std::string>();
}

std::optional<std::uint64_t> uint_field(const OpInput& in, std::string_view key) {
  const auto it = in.run.find(std::string(key));
  if (it == in.run.end()) return std::nullopt;
  if (!it->is_number_unsigned()) {
    throw InputError(Errc::SyntaxError, "expected a non-negative integer", field_pointer(in, key));
  }
  return it->get<std::uint64_t>();
}

std::uint32_t small_uint(const OpInput& in, std::string_view key, std::uint32_t fallback) {
  const auto v = uint_field(in, key);
  if (!v) return fallback;
  if (*v > 1'000'000) throw InputError(Errc::SyntaxError, "value out of range", field_pointer(in, key));
  return static_cast<std::uint32_t>(*v);
}

const TwistEntry& twist_ref(const OpInput& in) {
  if (!has(in, "twist") && in.scenario.twists.size() == 1) return in.scenario.twists.begin()->second;
  const std::string name = string_field(in, "twist");
  const auto it = in.scenario.twists.find(name);
  if (it == in.scenario.twists.end()) {
    throw InputError(Errc::DanglingReference, "unknown twist '" + name + "'", field_pointer(in, "twist"));
  }
  return it->second;
}

RingPtr ring_ref(const OpInput& in) {
  if (!has(in, "ring") && in.scenario.rings.size() == 1) return in.scenario.rings.begin()->second;
  const std::string name = string_field(in, "ring");
  const auto it = in.scenario.rings.find(name);
  if (it == in.scenario.rings.end()) {
    throw InputError(Errc::DanglingReference, "unknown ring '" + name + "'", field_pointer(in, "ring"));
  }
  return it->second;
}

OrePoly ore_literal(const OpInput& in, const TwistEntry& t, std::string_view key) {
  const std::string text = string_field(in, key);
  return at_pointer(field_pointer(in, key), [&] { return ore::parse_ore(t.context, text); });
}

std::vector<std::string> string_list(const OpInput& in, std::string_view key) {
  const json& v = require(in, key);
  if (!v.is_array()) throw InputError(Errc::SyntaxError, "expected an array of strings", field_pointer(in, key));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw InputError(Errc::SyntaxError, "expected a string", field_pointer(in, key) + "/" + std::to_string(i));
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<OrePoly> ore_list(const OpInput& in, const TwistEntry& t, std::string_view key) {
  std::vector<OrePoly> out;
  const auto texts = string_list(in, key);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out.push_back(at_pointer(field_pointer(in, key) + "/" + std::to_string(i),
                             [&] { return ore::parse_ore(t.context, texts[i]); }));
  }
  return out;
}

json render_all(const Ring& ring, const std::vector<Value>& values) {
  json out = json::array();
  for (const Value& v : values) out.push_back(ring.render(v));
  return out;
}

json opt_poly(const std::optional<OrePoly>& p) { return p ? json(p->to_string()) : json(nullptr); }

// ---------------------------------------------------------------------------

Executor prepare_validate(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  const auto samples = uint_field(in, "samples");
  return [t, samples](const RunSettings& s) {
    const std::size_t n = samples.value_or(s.budget.value_or(twists::kDefaultDerivSamples));
    const auto rep = twists::validate_twist(t.sigma, t.delta, n, s.seed);
    RunOutcome o;
    o.verdict = rep.pass ? "valid" : "invalid";
    o.pass = rep.pass;
    o.witnesses = {{"generator_pairs", rep.generator_pairs},
                   {"sampled_pairs", rep.sampled_pairs},
                   {"seed", rep.seed},
                   {"injective", twists::tri_name(rep.injective)},
                   {"injectivity_method", rep.injectivity_method},
                   {"failure", rep.failure ? json{{"law", rep.failure->law}, {"detail", rep.failure->detail}} : json(nullptr)}};
    o.display = t.context->describe() + ": " + o.verdict;
    if (rep.failure) o.display += " (" + rep.failure->law + ": " + rep.failure->detail + ")";
    return o;
  };
}

json criteria_json(const centerlab::LeadingCriteria& c) {
  return {{"applicable", c.applicable},
          {"sigma_fixed", c.sigma_fixed},
          {"twisted_commute", c.twisted_commute},
          {"regular", c.regular}};
}

Executor prepare_is_central(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  OrePoly f = ore_literal(in, t, "f");
  return [t, f](const RunSettings&) {
    const auto rep = centerlab::is_central(f);
    const Ring& ring = *t.context->ring();
    RunOutcome o;
    o.verdict = rep.central ? "central" : "not-central";
    o.witnesses = {{"degree", rep.degree},
                   {"lead", ring.render(rep.lead)},
                   {"counterexample", rep.counterexample ? json(*rep.counterexample) : json(nullptr)},
                   {"commutator", opt_poly(rep.commutator)},
                   {"criteria", criteria_json(rep.criteria)},
                   {"generators_complete", rep.generators_complete}};
    o.display = rep.central ? f.to_string() + " is central"
                            : "[" + f.to_string() + ", " + *rep.counterexample + "] = " + rep.commutator->to_string();
    return o;
  };
}

Executor prepare_leading(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  OrePoly f = ore_literal(in, t, "f");
  return [f](const RunSettings&) {
    const auto c = centerlab::central_leading_checks(f);
    RunOutcome o;
    const bool all = c.applicable && c.sigma_fixed && c.twisted_commute && c.regular;
    o.verdict = !c.applicable ? "not-applicable" : all ? "all-hold" : "some-fail";
    o.witnesses = criteria_json(c);
    o.display = "sigma(a)=a: " + std::string(c.sigma_fixed ? "yes" : "no") +
                ", r*a=a*sigma^n(r): " + (c.twisted_commute ? "yes" : "no") + ", regular: " + (c.regular ? "yes" : "no");
    return o;
  };
}

Executor prepare_semi(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  OrePoly p = ore_literal(in, t, "p");
  return [t, p](const RunSettings&) {
    const auto rep = centerlab::semi_invariant_solve(p);
    const Ring& ring = *t.context->ring();
    RunOutcome o;
    o.verdict = rep.semi_invariant ? "semi-invariant" : "not-semi-invariant";
    json pairs = json::array();
    for (const auto& [a, b] : rep.witnesses) pairs.push_back({{"a", ring.render(a)}, {"b", ring.render(b)}});
    o.witnesses = {{"pairs", pairs}, {"failure", rep.failure ? json(ring.render(*rep.failure)) : json(nullptr)}};
    o.display = p.to_string() + (rep.semi_invariant ? " is right semi-invariant"
                                                    : " has no b with p*a = b*p for a = " + ring.render(*rep.failure));
    return o;
  };
}

Executor prepare_quasi(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  const std::uint32_t n_max = small_uint(in, "n_max", 4);
  return [t, n_max](const RunSettings&) {
    const auto w = centerlab::quasi_algebraic_solve(t.delta, n_max);
    const Ring& ring = *t.context->ring();
    RunOutcome o;
    if (!w) {
      o.verdict = "none-found";
      o.witnesses = {{"n_max", n_max}};
      o.display = "no relation of order <= " + std::to_string(n_max);
      return o;
    }
    o.verdict = "quasi-algebraic";
    o.pass = w->verified;
    o.witnesses = {{"n", w->n}, {"a", render_all(ring, w->a)}, {"b", ring.render(w->b)}, {"verified", w->verified}};
    o.display = "n = " + std::to_string(w->n) + ", b = " + ring.render(w->b);
    return o;
  };
}

Executor prepare_graded(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  OrePoly f = ore_literal(in, t, "f");
  OrePoly g = ore_literal(in, t, "g");
  return [t, f, g](const RunSettings&) {
    const auto r = ore::graded_lead_check(f, g);
    RunOutcome o;
    o.verdict = r.pass ? "pass" : "fail";
    o.pass = r.pass;
    o.witnesses = {{"degree_f", r.degree_f},
                   {"degree_g", r.degree_g},
                   {"product_degree", r.product_degree},
                   {"expected_lead", t.context->ring()->render(r.expected_lead)},
                   {"expected_nonzero", r.expected_nonzero},
                   {"lead_matches", r.lead_matches},
                   {"graded_matches", r.graded_matches}};
    o.display = r.expected_nonzero ? "leading coefficient " + t.context->ring()->render(r.expected_lead)
                                   : "a*sigma^m(b) = 0; product degree " + std::to_string(r.product_degree);
    return o;
  };
}

template <bool Commutator>
Executor prepare_product(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  OrePoly f = ore_literal(in, t, "f");
  OrePoly g = ore_literal(in, t, "g");
  return [f, g](const RunSettings&) {
    const OrePoly p = Commutator ? ore::ore_commutator(f, g) : ore::ore_mul(f, g);
    RunOutcome o;
    o.verdict = "computed";
    o.witnesses = {{"value", p.to_string()}, {"degree", p.degree()}};
    o.display = p.to_string();
    return o;
  };
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Executor prepare_orbits(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  return [t](const RunSettings&) {
    auto dec = centerlab::orbit_decompose(t.sigma.ring(), t.sigma, t.delta);
    if (dec.sigma_flag && dec.delta_flag) centerlab::with_witnesses(dec);
    RunOutcome o;
    o.verdict = dec.sigma_flag && dec.delta_flag ? "decomposed" : "flags-fail";
    o.pass = dec.sigma_flag && dec.delta_flag;
    json orbits = json::array();
    json bs = json::array();
    for (std::size_t j = 0; j < dec.orbits.size(); ++j) {
      orbits.push_back(one_based(dec.orbits[j]));
      if (j < dec.witnesses.size() && dec.witnesses[j]) {
        bs.push_back(dec.blocks[j]->render(*dec.witnesses[j]));
      } else {
        bs.push_back(nullptr);
      }
    }
    o.witnesses = {{"rho", one_based(dec.rho)},
                   {"orbits", orbits},
                   {"sigma_flag", dec.sigma_flag},
                   {"delta_flag", dec.delta_flag},
                   {"inner_delta", bs}};
    o.display = std::to_string(dec.orbits.size()) + " orbit(s), rho = " + one_based(dec.rho).dump();
    return o;
  };
}

Executor prepare_inner_delta(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  const std::uint32_t orbit = small_uint(in, "orbit", 1);
  if (orbit == 0) throw InputError(Errc::SyntaxError, "orbits are numbered from 1", field_pointer(in, "orbit"));
  return [t, orbit](const RunSettings&) {
    const auto dec = centerlab::orbit_decompose(t.sigma.ring(), t.sigma, t.delta);
    const auto b = centerlab::inner_delta_witness(dec, orbit - 1);
    RunOutcome o;
    o.verdict = b ? "inner" : "none";
    const std::string rendered = b ? dec.blocks[orbit - 1]->render(*b) : "";
    o.witnesses = {{"orbit", orbit}, {"b", b ? json(rendered) : json(nullptr)}};
    o.display = b ? "b = " + rendered : "delta is not inner on the block";
    return o;
  };
}

Executor prepare_udim(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  return [t](const RunSettings&) {
    const auto rep = centerlab::udim_over_fixed(t.sigma, t.delta);
    const Ring& ring = *t.sigma.ring();
    RunOutcome o;
    o.verdict = "finite";
    o.witnesses = {{"total", rep.total},
                   {"fixed_basis", render_all(ring, rep.fixed_basis)},
                   {"idempotents", render_all(ring, rep.idempotents)},
                   {"field_degree", rep.field_degree},
                   {"dims", rep.dims}};
    o.display = "udim = " + std::to_string(rep.total);
    return o;
  };
}

Executor prepare_fixed(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  return [t](const RunSettings&) {
    const auto fs = twists::fixed_subalgebra(t.sigma, t.delta);
    const Ring& ring = *t.sigma.ring();
    RunOutcome o;
    o.verdict = "computed";
    o.witnesses = {{"basis", render_all(ring, fs.basis)}, {"center_basis", render_all(ring, fs.center_basis)}};
    o.display = "dim = " + std::to_string(fs.basis.size()) + " inside a center of dim " +
                std::to_string(fs.center_basis.size());
    return o;
  };
}

Executor prepare_kernel(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  const std::uint32_t bound = small_uint(in, "bound", 16);
  return [t, bound](const RunSettings&) {
    const auto rep = centerlab::kernel_chain(t.sigma, bound);
    const auto& p = static_cast<const rings::PolyRing&>(*t.sigma.ring());
    RunOutcome o;
    o.verdict = rep.stabilized ? "stabilized" : "not-stabilized";
    json kernels = json::array();
    for (const auto& k : rep.kernels) {
      json names = json::array();
      for (std::size_t i : k) names.push_back(p.variables()[i]);
      kernels.push_back(names);
    }
    o.witnesses = {{"kernels", kernels}, {"n", rep.n}, {"unbounded_family", rep.unbounded_family}};
    o.display = "ker sigma^" + std::to_string(rep.n) + " = (" + [&] {
      std::string s;
      for (const auto& v : kernels[rep.n]) s += (s.empty() ? "" : ",") + v.get<std::string>();
      return s;
    }() + ")";
    return o;
  };
}

Executor prepare_jordan(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  if (t.sigma.kind() != twists::EndoKind::Inner || !t.sigma.rep().ambient) {
    throw InputError(Errc::Unsupported, "Jordan closure probes need an inner sigma with an ambient ring",
                     field_pointer(in, "twist"));
  }
  const RingPtr amb = t.sigma.rep().ambient;
  std::vector<Value> probes;
  const auto texts = string_list(in, "probes");
  for (std::size_t i = 0; i < texts.size(); ++i) {
    probes.push_back(at_pointer(field_pointer(in, "probes") + "/" + std::to_string(i), [&] { return amb->parse(texts[i]); }));
  }
  const std::uint32_t depth = small_uint(in, "depth", 3);
  return [t, amb, probes, texts, depth](const RunSettings&) {
    const auto rep = centerlab::jordan_closure_probe(t.sigma, probes, depth);
    RunOutcome o;
    o.verdict = rep.chain_ascending ? "ascending" : "not-ascending";
    o.pass = rep.chain_ascending;
    json levels = json::array();
    std::string text;
    for (std::size_t i = 0; i < rep.probes.size(); ++i) {
      const auto& lv = rep.probes[i].level;
      levels.push_back({{"probe", amb->render(probes[i])}, {"level", lv ? json(*lv) : json(nullptr)}});
      text += (i ? "; " : "") + texts[i] + " -> " + (lv ? std::to_string(*lv) : "none");
    }
    o.witnesses = {{"depth", depth}, {"probes", levels}};
    o.display = text;
    return o;
  };
}

Executor prepare_pipeline(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  centerlab::PipelineBounds bounds;
  bounds.order = small_uint(in, "order_bound", bounds.order);
  bounds.kernel = small_uint(in, "kernel_bound", bounds.kernel);
  return [t, bounds](const RunSettings&) {
    const auto rep = centerlab::pi_decide_pipeline(t.sigma, t.delta, bounds);
    RunOutcome o;
    o.verdict = rep.verdict;
    json chain = nullptr;
    if (rep.chain) {
      chain = {{"n", rep.chain->n}, {"stabilized", rep.chain->stabilized}};
    }
    o.witnesses = {{"path", rep.path},
                   {"order", rep.order ? json(*rep.order) : json(nullptr)},
                   {"certificate", rep.certificate ? json(*rep.certificate) : json(nullptr)},
                   {"certificate_verified", rep.certificate_verified},
                   {"chain", chain},
                   {"surviving", rep.surviving},
                   {"nilpotency_exponent", rep.nilpotency_exponent ? json(*rep.nilpotency_exponent) : json(nullptr)},
                   {"note", rep.note}};
    o.display = rep.verdict + " (" + rep.path + "): " + rep.note;
    return o;
  };
}

json search_json(const pilab::PiSearchReport& r) {
  return {{"identity", r.spec.name()},
          {"strategy", r.strategy},
          {"pool_size", r.pool_size},
          {"budget", r.budget},
          {"seed", r.seed},
          {"tried", r.tried},
          {"outcome", r.outcome},
          {"index", r.index ? json(*r.index) : json(nullptr)},
          {"witness", r.witness},
          {"value", r.value.empty() ? json(nullptr) : json(r.value)},
          {"reverified", r.reverified}};
}

RunOutcome search_outcome(const pilab::PiSearchReport& r) {
  RunOutcome o;
  o.verdict = r.outcome;
  o.witnesses = search_json(r);
  // A counterexample that fails to re-evaluate indicates an evaluator fault.
  o.pass = r.outcome != "counterexample" || r.reverified;
  if (r.outcome == "counterexample") {
    std::string args;
    for (const auto& w : r.witness) args += (args.empty() ? "" : ", ") + w;
    o.display = r.spec.name() + "(" + args + ") = " + r.value;
  } else {
    o.display = r.spec.name() + ": " + r.outcome + " after " + std::to_string(r.tried) + " tuple(s)";
  }
  return o;
}

pilab::SearchOptions search_options(const OpInput& in) {
  pilab::SearchOptions opt;
  if (has(in, "strategy")) {
    const std::string s = string_field(in, "strategy");
    if (s != "exhaustive" && s != "sampled") {
      throw InputError(Errc::UnknownKind, "unknown strategy '" + s + "'", field_pointer(in, "strategy"));
    }
    opt.exhaustive = s == "exhaustive";
  }
  opt.pool_degree = small_uint(in, "pool_degree", opt.pool_degree);
  opt.sample_degree = small_uint(in, "sample_degree", opt.sample_degree);
  return opt;
}

void apply_settings(pilab::SearchOptions& opt, const RunSettings& s) {
  opt.seed = s.seed;
  opt.budget = s.budget.value_or(opt.exhaustive ? 100000 : 200);
}

Executor prepare_search(const OpInput& in) {
  const std::string text = string_field(in, "identity");
  const auto spec = at_pointer(field_pointer(in, "identity"), [&] { return pilab::IdentitySpec::parse(text); });
  const auto base = search_options(in);
  if (has(in, "twist") || (!has(in, "ring") && !in.scenario.twists.empty())) {
    const TwistEntry& t = twist_ref(in);
    return [t, spec, base](const RunSettings& s) {
      auto opt = base;
      apply_settings(opt, s);
      return search_outcome(pilab::identity_search(t.context, spec, opt));
    };
  }
  const RingPtr ring = ring_ref(in);
  return [ring, spec, base](const RunSettings& s) {
    auto opt = base;
    apply_settings(opt, s);
    return search_outcome(pilab::identity_search(ring, spec, opt));
  };
}

Executor prepare_commutator_power(const OpInput& in) {
  const TwistEntry& t = twist_ref(in);
  const std::uint32_t k = small_uint(in, "k", 1);
  if (k < 1) throw InputError(Errc::SyntaxError, "k must be >= 1", field_pointer(in, "k"));
  const auto base = search_options(in);
  return [t, k, base](const RunSettings& s) {
    auto opt = base;
    apply_settings(opt, s);
    return search_outcome(pilab::commutator_power_check(t.context, k, opt));
  };
}

template <class T>
RunOutcome eval_outcome(std::uint32_t m, const std::vector<T>& elems) {
  const T v = pilab::standard_identity_eval<T>(m, elems);
  RunOutcome o;
  o.verdict = v.is_zero() ? "zero" : "nonzero";
  o.witnesses = {{"value", v.to_string()}};
  o.display = "S_" + std::to_string(m) + " = " + v.to_string();
  return o;
}

Executor prepare_standard_eval(const OpInput& in) {
  const std::uint32_t m = small_uint(in, "m", 0);
  if (has(in, "twist") || (!has(in, "ring") && !in.scenario.twists.empty())) {
    const TwistEntry& t = twist_ref(in);
    auto elems = ore_list(in, t, "elements");
    return [m, elems](const RunSettings&) { return eval_outcome(m, elems); };
  }
  const RingPtr ring = ring_ref(in);
  std::vector<rings::RingElem> elems;
  const auto texts = string_list(in, "elements");
  for (std::size_t i = 0; i < texts.size(); ++i) {
    elems.emplace_back(ring, at_pointer(field_pointer(in, "elements") + "/" + std::to_string(i),
                                        [&] { return ring->parse(texts[i]); }));
  }
  return [m, elems](const RunSettings&) { return eval_outcome(m, elems); };
}

RunOutcome replay_outcome(const pilab::ReplayReport& r) {
  RunOutcome o;
  o.verdict = r.pass ? "pass" : "fail";
  o.pass = r.pass;
  json checks = json::array();
  std::string failed;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
    if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
  }
  o.witnesses = {{"id", r.id},
                 {"seed", r.seed},
                 {"samples", r.samples},
                 {"checks", checks},
                 {"observations", r.observations},
                 {"notes", r.notes}};
  o.display = r.id + ": " + std::to_string(r.checks.size()) + " check(s), " +
              (r.pass ? "all pass" : "failed: " + failed);
  return o;
}

Executor prepare_replay(const OpInput& in) {
  const std::string id = string_field(in, "id");
  const auto samples = uint_field(in, "samples");
  return [id, samples](const RunSettings& s) {
    pilab::ReplayOptions opt;
    opt.seed = s.seed;
    if (samples) opt.samples = *samples;
    if (s.budget) opt.budget = *s.budget;
    return replay_outcome(pilab::replay(id, opt));
  };
}

constexpr OpInfo kOps[] = {
    {"validate", "validate", prepare_validate},
    {"is_central", "center", prepare_is_central},
    {"central_leading_checks", "center", prepare_leading},
    {"semi_invariant_solve", "center", prepare_semi},
    {"quasi_algebraic_solve", "center", prepare_quasi},
    {"graded_lead_check", "center", prepare_graded},
    {"ore_mul", "center", prepare_product<false>},
    {"ore_commutator", "center", prepare_product<true>},
    {"orbit_decompose", "decompose", prepare_orbits},
    {"inner_delta_witness", "decompose", prepare_inner_delta},
    {"udim_over_fixed", "decompose", prepare_udim},
    {"fixed_subalgebra", "decompose", prepare_fixed},
    {"kernel_chain", "decompose", prepare_kernel},
    {"jordan_closure_probe", "decompose", prepare_jordan},
    {"pi_decide_pipeline", "pipeline", prepare_pipeline},
    {"identity_search", "pi-search", prepare_search},
    {"commutator_power_check", "pi-search", prepare_commutator_power},
    {"standard_identity_eval", "pi-search", prepare_standard_eval},
    {"replay", "replay", prepare_replay},
};

}  // namespace

std::span<const OpInfo> op_table() { return kOps; }


}  // namespace skewlab::cli::detail
