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

#include "skewlab/pilab/replay.hpp"

#include <charconv>

#include "skewlab/centerlab/centerlab.hpp"
#include "skewlab/error.hpp"
#include "skewlab/pilab/fixture.hpp"
#include "skewlab/pilab/identities.hpp"

namespace skewlab::pilab {

using nlohmann::json;
using ore::OreContext;
using ore::OrePoly;
using rings::Constraint;
using rings::Ring;
using rings::RingPtr;
using rings::ScalarField;
using rings::Value;
using twists::Endo;

const json& replay_fixture() {
  static const json fixture = json::parse(replay_fixture_text());
  return fixture;
}

std::vector<std::string> replay_suite() { return replay_fixture().at("suite").get<std::vector<std::string>>(); }

RingPtr example_ring() {
  return rings::make_constrained_matrix(2, {Constraint::parse("Z+xQ[x]"), Constraint::parse("Z+xQ[x]"),
                                            Constraint::parse("xQ[x]"), Constraint::parse("Z+xQ[x]")});
}

Endo example_sigma() {
  const RingPtr r = example_ring();
  return twists::inner(r, r->ambient()->parse("diag(1,2)"), r->ambient());
}

namespace {

struct Family {
  std::string_view name;
  std::size_t arity;
  json (*observe)(const std::vector<std::uint32_t>&, const ReplayOptions&, std::vector<std::string>&);
};

RingPtr rationals() { return rings::make_field(ScalarField::rationals()); }

json observe_example(const std::vector<std::uint32_t>&, const ReplayOptions& opt, std::vector<std::string>&) {
  const RingPtr r = example_ring();
  const Endo sigma = example_sigma();
  const Ring& amb = *r->ambient();
  const Value& u = sigma.rep().u;
  const Value& u_inv = sigma.rep().u_inv;
  const auto preimage = [&](const Value& a) { return amb.mul(amb.mul(u, a), u_inv); };
  json obs;

  const auto tw = twists::validate_twist(sigma, twists::zero_derivation(sigma), twists::kDefaultDerivSamples, opt.seed);
  obs["sigma-injective"] = tw.pass && tw.injective == twists::Tri::True;
  obs["e12-not-in-image"] = !r->contains(preimage(amb.parse("E12")));
  obs["u-sigma-fixed"] = r->contains(u) && r->equal(sigma(u), u);

  const auto loc = rings::localize(r, r->parse("2*I"));
  const auto& l = static_cast<const rings::LocalizationRing&>(*loc);
  const Endo sigma_l = twists::localized(loc, sigma);
  rings::Rng rng(opt.seed);
  std::vector<Value> probes{l.embed(r->parse("E12"))};
  while (probes.size() < 20) probes.push_back(l.random(rng));
  std::size_t hit = 0;
  for (const Value& p : probes) {
    const auto& f = p.as<rings::Frac>();
    const Value q = l.normalize(rings::Frac{preimage(*f.num), f.exp});
    if (l.contains(q) && l.equal(sigma_l(q), p)) ++hit;
  }
  obs["localization-surjective"] = {{"probes", probes.size()}, {"hit", hit}};

  // The closure A of the example has Z[1/2]+xQ[x] in the (1,2) corner.
  const RingPtr closure = rings::make_constrained_matrix(
      2, {Constraint::parse("Z+xQ[x]"), Constraint::parse("Z[1/2]+xQ[x]"), Constraint::parse("xQ[x]"),
          Constraint::parse("Z+xQ[x]")});
  const std::vector<std::string> texts{"1/2*E12", "1/2*E21", "1/4*E12", "1/2*E11", "x/3*E21", "E11 + 1/8*E12"};
  std::vector<Value> jprobes;
  for (const auto& t : texts) jprobes.push_back(amb.parse(t));
  const auto jr = centerlab::jordan_closure_probe(sigma, jprobes, 5);
  json levels = json::object();
  bool agrees = jr.chain_ascending;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const auto& level = jr.probes[i].level;
    levels[texts[i]] = level ? json(*level) : json(nullptr);
    agrees = agrees && level.has_value() == closure->contains(jprobes[i]);
  }
  obs["jordan-levels"] = levels;
  obs["jordan-closure"] = {{"1/2*E12", levels["1/2*E12"]}, {"1/2*E21", levels["1/2*E21"]}, {"agrees-with-A", agrees}};
  return obs;
}

json observe_orepi(const std::vector<std::uint32_t>&, const ReplayOptions& opt, std::vector<std::string>& notes) {
  const RingPtr r = example_ring();
  const Endo sigma = example_sigma();
  const auto ctx = OreContext::make(sigma, twists::zero_derivation(sigma));
  const RingPtr amb = r->ambient();
  const Endo sigma_a = twists::inner(amb, sigma.rep().u);
  const auto ctx_a = OreContext::make(sigma_a, twists::zero_derivation(sigma_a), ctx->var());
  const Endo id = twists::identity(amb);
  const auto ctx_z = OreContext::make(id, twists::zero_derivation(id), "z");
  const Value& u_inv = sigma.rep().u_inv;
  // y^i = u^{-i} z^i, where z = u·y is central in S[y;σ].
  const auto to_z = [&](const OrePoly& f) {
    std::vector<Value> c;
    Value scale = amb->one();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      c.push_back(amb->mul(f.coeffs()[i], scale));
      scale = amb->mul(scale, u_inv);
    }
    return OrePoly(ctx_z, std::move(c));
  };

  rings::Rng rng(opt.seed);
  bool assoc = true;
  bool graded = true;
  bool embed = true;
  for (std::uint64_t s = 0; s < opt.samples; ++s) {
    const OrePoly f = ore::random_ore(ctx, rng, 2);
    const OrePoly g = ore::random_ore(ctx, rng, 2);
    const OrePoly h = ore::random_ore(ctx, rng, 2);
    const OrePoly fg = f * g;
    assoc = assoc && fg * h == f * (g * h);
    if (!f.is_zero() && !g.is_zero()) graded = graded && ore::graded_lead_check(f, g).pass;
    // Values of R are ambient values, so coefficients carry over unchanged.
    const OrePoly fa(ctx_a, f.coeffs());
    const OrePoly ga(ctx_a, g.coeffs());
    embed = embed && OrePoly(ctx_a, fg.coeffs()) == fa * ga && to_z(fa) * to_z(ga) == to_z(fa * ga);
  }
  json obs;
  obs["associativity"] = assoc;
  obs["graded-lead"] = graded;
  obs["embedding-consistent"] = embed;
  obs["pi-certified"] = false;
  notes.emplace_back("PI-ness rests on the embedding into M_2(Q[x])[z]; only its multiplicativity is checked");
  return obs;
}

json observe_central(const std::vector<std::uint32_t>&, const ReplayOptions& opt, std::vector<std::string>&) {
  const RingPtr m2 = rings::make_matrix(rationals(), 2);
  const Value u = m2->parse("antidiag(1,1)");
  const Endo sigma = twists::inner(m2, u);
  const auto ctx = OreContext::make(sigma, twists::zero_derivation(sigma));
  json obs;
  const OrePoly f1 = OrePoly::monomial(ctx, u, 1);
  const auto rep1 = centerlab::is_central(f1);
  obs["ux-central"] = rep1.central;
  obs["ux-criteria"] = {rep1.criteria.sigma_fixed, rep1.criteria.twisted_commute, rep1.criteria.regular};
  obs["ux3-central"] = centerlab::is_central(OrePoly::monomial(ctx, u, 3)).central;
  rings::Rng rng(opt.seed);
  bool commutes = true;
  for (int s = 0; s < 100; ++s) commutes = commutes && ore::ore_commutator(f1, ore::random_ore(ctx, rng, 2)).is_zero();
  obs["ux-commutes-with-samples"] = commutes;

  const Endo tau = twists::inner(m2, m2->parse("diag(1,2)"));
  const auto ctx2 = OreContext::make(tau, twists::zero_derivation(tau));
  const auto rep2 = centerlab::is_central(OrePoly::x(ctx2));
  obs["x-not-central"] = {{"central", rep2.central},
                          {"with", rep2.counterexample.value_or("")},
                          {"commutator", rep2.commutator ? rep2.commutator->to_string() : ""}};
  return obs;
}

json observe_conjugation(const std::vector<std::uint32_t>& p, const ReplayOptions&, std::vector<std::string>&) {
  const std::uint32_t n = p[0];
  if (n < 1) throw Error(Errc::PreconditionViolation, "conjugation replay needs n >= 1");
  const RingPtr g = rings::make_field(ScalarField::gaussian());
  const RingPtr prod = rings::make_product(std::vector<RingPtr>(n, g));
  const Endo sigma = twists::conjugation(prod);
  const auto rep = centerlab::udim_over_fixed(sigma, twists::zero_derivation(sigma));
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  const Endo pi = twists::component_permutation(prod, shift);
  const Endo relabeled = twists::compose(pi, twists::compose(sigma, twists::power(pi, n - 1)));
  const auto rep2 = centerlab::udim_over_fixed(relabeled, twists::zero_derivation(relabeled));
  json obs;
  obs["udim"] = rep.total;
  obs["udim-equals-2n"] = rep.total == 2 * n;
  obs["fixed-dimension"] = rep.fixed_basis.size();
  obs["per-component"] = rep.dims;
  obs["permutation-invariant"] = rep2.total == rep.total;
  return obs;
}

json observe_truncated(const std::vector<std::uint32_t>& p, const ReplayOptions& opt, std::vector<std::string>&) {
  const std::uint32_t n = p[0];
  if (n < 1) throw Error(Errc::PreconditionViolation, "truncated-shift replay needs n >= 1");
  std::vector<std::string> vars;
  for (std::uint32_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  const RingPtr ring = rings::make_polynomial(ScalarField::rationals(), vars);
  const Endo sigma = twists::shift(ring);
  const auto delta = twists::zero_derivation(sigma);
  const auto chain = centerlab::kernel_chain(sigma, 2 * n + 2);
  json ideal = json::array();
  for (std::size_t i : chain.kernels[chain.n]) ideal.push_back(vars[i]);
  json obs;
  obs["kernel-chain"] = {{"stabilized", chain.stabilized}, {"index", chain.n}, {"ideal", ideal}};
  obs["kernel-stabilizes-at-n"] = chain.stabilized && chain.n == n && ideal.size() == n;
  const auto verdict = centerlab::pi_decide_pipeline(sigma, delta);
  obs["pipeline-verdict"] = verdict.verdict;
  const auto ctx = OreContext::make(sigma, delta);
  const auto holds = commutator_power_check(ctx, n + 1, {.budget = opt.samples, .seed = opt.seed});
  obs["identity-n-plus-1"] = holds.outcome;
  const auto fails = commutator_power_check(ctx, n, {.exhaustive = true, .budget = opt.budget});
  obs["identity-n"] = fails.outcome;
  obs["identity-n-reverified"] = fails.reverified;
  obs["identity-n-witness"] = fails.witness;
  obs["identity-n-value"] = fails.value;
  return obs;
}

json observe_infinite(const std::vector<std::uint32_t>& p, const ReplayOptions&, std::vector<std::string>& notes) {
  const std::uint32_t m = p[0];
  const std::uint32_t k = p[1];
  const std::uint32_t n = p[2];
  if (m < 2 || k < 1 || n <= m * k) {
    throw Error(Errc::PreconditionViolation, "infinite-shift replay needs m >= 2, k >= 1 and n > m*k");
  }
  const std::uint32_t vars_needed = n + m - 1;
  std::vector<std::string> vars;
  for (std::uint32_t i = 1; i <= vars_needed; ++i) vars.push_back("y" + std::to_string(i));
  const RingPtr ring = rings::make_polynomial(ScalarField::rationals(), vars);
  const auto& poly = static_cast<const rings::PolyRing&>(*ring);
  const Endo sigma = twists::shift(ring);
  const auto ctx = OreContext::make(sigma, twists::zero_derivation(sigma));
  std::vector<OrePoly> args;
  for (std::uint32_t i = 0; i < m; ++i) args.push_back(OrePoly::monomial(ctx, poly.variable(n - 1 + i), 1));
  const OrePoly s = standard_identity_eval<OrePoly>(m, args);
  const OrePoly s_ref = standard_identity_bruteforce<OrePoly>(m, args);
  const OrePoly sk = s.pow(k);

  json obs;
  obs["variables"] = vars_needed;
  obs["standard-value"] = s.to_string();
  obs["evaluators-agree"] = s == s_ref;
  obs["standard-degree"] = s.degree();
  bool form = s.degree() == static_cast<int>(m);
  if (form) {
    // lead = y_n^m + f with deg_{y_n} f < m.
    std::size_t top_terms = 0;
    for (const auto& [e, c] : s.lead().as<rings::Poly>().terms) {
      if (e[n - 1] > m) form = false;
      if (e[n - 1] == m) {
        ++top_terms;
        rings::Exponents pure(vars_needed, 0);
        pure[n - 1] = m;
        form = form && e == pure && c.is_one();
      }
    }
    form = form && top_terms == 1;
  }
  obs["leading-form"] = form;
  obs["power-nonzero"] = !sk.is_zero();
  obs["power-degree"] = sk.degree();
  bool product = !s.is_zero();
  if (product) {
    Value expected = ring->one();
    for (std::uint32_t j = 0; j < k; ++j) expected = ring->mul(expected, sigma.apply_power(s.lead(), j * m));
    product = !sk.is_zero() && ring->equal(sk.lead(), expected);
  }
  obs["power-lead-product"] = product;
  notes.push_back("realized in " + ring->descriptor() + " (N = n+m-1 variables)");
  return obs;
}

constexpr Family kFamilies[] = {
    {"ex-2.1", 0, observe_example},
    {"ex-2.10-orepi", 0, observe_orepi},
    {"ex-picenter-uxn", 0, observe_central},
    {"ex-3.9-conjugation", 1, observe_conjugation},
    {"ex-4.8-truncated-shift", 1, observe_truncated},
    {"ex-4.9-infinite-shift", 3, observe_infinite},
};

std::vector<std::uint32_t> parse_params(std::string_view text, std::string_view id) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::uint32_t v = 0;
    const auto item = text.substr(pos, comma - pos);
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(Errc::UnknownExample, "malformed parameters in '" + std::string(id) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ReplayReport replay(std::string_view id, const ReplayOptions& options) {
  std::string_view family = id;
  std::vector<std::uint32_t> params;
  if (const auto open = id.find('('); open != std::string_view::npos) {
    if (id.back() != ')') throw Error(Errc::UnknownExample, "malformed replay id '" + std::string(id) + "'");
    family = id.substr(0, open);
    params = parse_params(id.substr(open + 1, id.size() - open - 2), id);
  }
  const Family* fam = nullptr;
  for (const Family& f : kFamilies) {
    if (f.name == family) fam = &f;
  }
  if (fam == nullptr) throw Error(Errc::UnknownExample, "unknown replay '" + std::string(id) + "'");
  const json& fixture = replay_fixture();
  const json& fentry = fixture.at("families").at(std::string(family));
  if (params.empty() && fam->arity > 0) params = fentry.at("default").get<std::vector<std::uint32_t>>();
  if (params.size() != fam->arity) {
    throw Error(Errc::UnknownExample, std::string(family) + " takes " + std::to_string(fam->arity) + " parameters");
  }

  ReplayReport rep;
  rep.family = std::string(family);
  rep.params = params;
  rep.id = rep.family;
  if (!params.empty()) {
    rep.id += "(";
    for (std::size_t i = 0; i < params.size(); ++i) rep.id += (i ? "," : "") + std::to_string(params[i]);
    rep.id += ")";
  }
  rep.seed = options.seed;
  rep.samples = options.samples;
  rep.observations = fam->observe(params, options, rep.notes);

  json expected = fentry.at("checks");
  if (const auto it = fixture.at("instances").find(rep.id); it != fixture.at("instances").end()) {
    for (const auto& [k, v] : it->items()) expected[k] = v;
  }
  rep.pass = true;
  for (const auto& [name, want] : expected.items()) {
    ReplayCheck c{.name = name, .expected = want};
    if (const auto it = rep.observations.find(name); it != rep.observations.end()) c.observed = *it;
    c.pass = c.observed == c.expected;
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace skewlab::pilab
