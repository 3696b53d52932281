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

#include "skewlab/pilab/identities.hpp"

#include <charconv>

namespace skewlab::pilab {

using rings::RingElem;
using rings::RingPtr;

std::string IdentitySpec::name() const {
  switch (kind) {
    case Kind::Standard: return "S_" + std::to_string(arity);
    case Kind::StandardPower: return "S_" + std::to_string(arity) + "^" + std::to_string(exponent);
    case Kind::CommutatorPower: return "[x1,x2]^" + std::to_string(exponent);
  }
  return "?";
}

namespace {

std::uint32_t parse_number(std::string_view text, std::string_view whole) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::ArityMismatch, "malformed identity '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

IdentitySpec IdentitySpec::parse(std::string_view text) {
  if (text.starts_with("[x1,x2]")) {
    std::string_view rest = text.substr(7);
    if (rest.empty()) return commutator_power(1);
    if (rest[0] != '^') throw Error(Errc::ArityMismatch, "malformed identity '" + std::string(text) + "'");
    const std::uint32_t k = parse_number(rest.substr(1), text);
    if (k < 1) throw Error(Errc::ArityMismatch, "exponent must be >= 1");
    return commutator_power(k);
  }
  if (text.starts_with("S_")) {
    std::string_view rest = text.substr(2);
    const auto caret = rest.find('^');
    const std::uint32_t m = parse_number(rest.substr(0, caret), text);
    if (m < 2) throw Error(Errc::ArityMismatch, "standard identities need m >= 2");
    if (caret == std::string_view::npos) return standard(m);
    const std::uint32_t k = parse_number(rest.substr(caret + 1), text);
    if (k < 1) throw Error(Errc::ArityMismatch, "exponent must be >= 1");
    return standard_power(m, k);
  }
  throw Error(Errc::ArityMismatch, "unknown identity '" + std::string(text) + "'");
}

namespace {

void monomials(const rings::PolyRing& p, std::uint32_t degree, std::size_t var, rings::Exponents& e, std::uint32_t used,
               std::vector<RingElem>& out, const RingPtr& ring) {
  if (var == p.variables().size()) {
    const rings::Value v = p.monomial(e, p.base_field().one());
    if (!p.is_zero(v)) out.emplace_back(ring, v);
    return;
  }
  for (std::uint32_t k = 0; used + k <= degree; ++k) {
    e[var] = k;
    monomials(p, degree, var + 1, e, used + k, out, ring);
  }
  e[var] = 0;
}

}  // namespace

std::vector<RingElem> ring_pool(const RingPtr& ring, std::uint32_t degree) {
  std::vector<RingElem> out;
  if (const auto* m = dynamic_cast<const rings::MatrixRing*>(ring.get())) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      for (std::size_t j = 0; j < m->size(); ++j) out.emplace_back(ring, m->unit(i, j));
    }
    return out;
  }
  if (const auto* p = dynamic_cast<const rings::PolyRing*>(ring.get())) {
    rings::Exponents e(p->variables().size(), 0);
    monomials(*p, degree, 0, e, 0, out, ring);
    // Lower total degree first, matching the rendering order.
    std::stable_sort(out.begin(), out.end(), [&](const RingElem& a, const RingElem& b) {
      const auto deg = [](const RingElem& x) {
        const auto& ex = x.value().as<rings::Poly>().terms.begin()->first;
        return std::accumulate(ex.begin(), ex.end(), 0U);
      };
      return deg(a) < deg(b);
    });
    return out;
  }
  if (ring->dimension()) {
    for (const auto& b : ring->basis()) out.emplace_back(ring, b);
    return out;
  }
  out.emplace_back(ring, ring->one());
  for (const auto& g : ring->generators()) out.emplace_back(ring, g);
  return out;
}

std::vector<ore::OrePoly> ore_pool(const ore::ContextPtr& ctx, std::uint32_t degree) {
  std::vector<ore::OrePoly> out;
  const auto base = ring_pool(ctx->ring(), degree);
  for (std::size_t e = 0; e <= 1; ++e) {
    for (const RingElem& m : base) out.push_back(ore::OrePoly::monomial(ctx, m.value(), e));
  }
  return out;
}

PiSearchReport identity_search(const ore::ContextPtr& ctx, const IdentitySpec& spec, const SearchOptions& options) {
  if (options.exhaustive) return search_exhaustive(spec, ore_pool(ctx, options.pool_degree), options.budget);
  return search_sampled(
      spec, [&](rings::Rng& rng) { return ore::random_ore(ctx, rng, options.sample_degree); }, options.budget,
      options.seed);
}

PiSearchReport identity_search(const RingPtr& ring, const IdentitySpec& spec, const SearchOptions& options) {
  if (options.exhaustive) return search_exhaustive(spec, ring_pool(ring, options.pool_degree), options.budget);
  return search_sampled(
      spec, [&](rings::Rng& rng) { return RingElem(ring, ring->random(rng)); }, options.budget, options.seed);
}

PiSearchReport commutator_power_check(const ore::ContextPtr& ctx, std::uint32_t k, const SearchOptions& options) {
  if (k < 1) throw Error(Errc::ArityMismatch, "commutator power needs k >= 1");
  return identity_search(ctx, IdentitySpec::commutator_power(k), options);
}

}  // namespace skewlab::pilab
