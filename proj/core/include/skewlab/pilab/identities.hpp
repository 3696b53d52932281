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

#ifndef SKEWLAB_PILAB_IDENTITIES_HPP
#define SKEWLAB_PILAB_IDENTITIES_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewlab/error.hpp"
#include "skewlab/ore/orepoly.hpp"
#include "skewlab/rings/random.hpp"

namespace skewlab::pilab {

template <class T>
concept AlgebraElement = requires(const T& a, const T& b) {
  { a * b } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

inline constexpr std::uint32_t kMaxStandardArity = 6;

struct IdentitySpec {
  enum class Kind { Standard, CommutatorPower, StandardPower };
  Kind kind = Kind::Standard;
  std::uint32_t arity = 2;
  std::uint32_t exponent = 1;

  static IdentitySpec standard(std::uint32_t m) { return {Kind::Standard, m, 1}; }
  static IdentitySpec standard_power(std::uint32_t m, std::uint32_t k) { return {Kind::StandardPower, m, k}; }
  static IdentitySpec commutator_power(std::uint32_t k) { return {Kind::CommutatorPower, 2, k}; }

  /// "S_3", "S_2^2", "[x1,x2]^3".
  std::string name() const;
  /// Inverse of name(); throws ArityMismatch on malformed input.
  static IdentitySpec parse(std::string_view text);
};

namespace detail {

inline void check_standard_arity(std::size_t m, std::size_t given) {
  if (m > kMaxStandardArity) {
    throw Error(Errc::BudgetExceeded, "S_" + std::to_string(m) + " exceeds the " + std::to_string(kMaxStandardArity) +
                                          "-variable cap");
  }
  if (m < 2) throw Error(Errc::ArityMismatch, "standard identities need m >= 2");
  if (given != m) {
    throw Error(Errc::ArityMismatch, "S_" + std::to_string(m) + " takes " + std::to_string(m) + " arguments, got " +
                                         std::to_string(given));
  }
}

template <AlgebraElement T>
T power(const T& a, std::uint32_t k) {
  T out = a;
  for (std::uint32_t i = 1; i < k; ++i) out = out * a;
  return out;
}

}  // namespace detail

/// S_m by expansion along the first factor, memoized over index subsets:
/// S(A) = Σ_{i∈A} (−1)^{pos_A(i)} e_i·S(A∖{i}).
template <AlgebraElement T>
T standard_identity_eval(std::uint32_t m, std::span<const T> elems) {
  detail::check_standard_arity(m, elems.size());
  const std::uint32_t full = (1U << m) - 1U;
  std::vector<std::optional<T>> memo(full + 1);
  for (std::uint32_t i = 0; i < m; ++i) memo[1U << i] = elems[i];
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (memo[mask]) continue;
    std::optional<T> acc;
    int pos = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      T term = elems[i] * *memo[mask & ~(1U << i)];
      if (!acc) {
        acc = (pos % 2 == 0) ? term : -term;
      } else {
        acc = (pos % 2 == 0) ? *acc + term : *acc - term;
      }
      ++pos;
    }
    memo[mask] = std::move(acc);
  }
  return *memo[full];
}

/// Σ_π sign(π)·e_{π(1)}⋯e_{π(m)} over all m! permutations; the reference path.
template <AlgebraElement T>
T standard_identity_bruteforce(std::uint32_t m, std::span<const T> elems) {
  detail::check_standard_arity(m, elems.size());
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0U);
  std::optional<T> acc;
  do {
    int inversions = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    T prod = elems[perm[0]];
    for (std::uint32_t i = 1; i < m; ++i) prod = prod * elems[perm[i]];
    if (!acc) {
      acc = inversions % 2 == 0 ? prod : -prod;
    } else {
      acc = inversions % 2 == 0 ? *acc + prod : *acc - prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *acc;
}

template <AlgebraElement T>
T evaluate_identity(const IdentitySpec& spec, std::span<const T> elems, bool reference_path = false) {
  switch (spec.kind) {
    case IdentitySpec::Kind::CommutatorPower: {
      if (elems.size() != 2) throw Error(Errc::ArityMismatch, spec.name() + " takes 2 arguments");
      if (reference_path) {
        // Expand the commutator through the standard-identity reference path.
        return detail::power(standard_identity_bruteforce<T>(2, elems), spec.exponent);
      }
      return detail::power(elems[0] * elems[1] - elems[1] * elems[0], spec.exponent);
    }
    case IdentitySpec::Kind::Standard:
    case IdentitySpec::Kind::StandardPower: {
      const T s = reference_path ? standard_identity_bruteforce<T>(spec.arity, elems)
                                 : standard_identity_eval<T>(spec.arity, elems);
      return detail::power(s, spec.kind == IdentitySpec::Kind::Standard ? 1 : spec.exponent);
    }
  }
  throw Error(Errc::ArityMismatch, "unknown identity kind");
}

struct PiSearchReport {
  IdentitySpec spec;
  std::string strategy;  // exhaustive | sampled
  std::size_t pool_size = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t tried = 0;
  std::string outcome;  // counterexample | no-counterexample-found | budget-exceeded
  std::optional<std::uint64_t> index;
  std::vector<std::string> witness;
  std::string value;
  /// The witness re-evaluated to the same nonzero value on the reference path.
  bool reverified = false;
};

namespace detail {

template <AlgebraElement T>
void record(PiSearchReport& rep, std::uint64_t index, const std::vector<T>& tuple, const T& value) {
  rep.outcome = "counterexample";
  rep.index = index;
  for (const T& t : tuple) rep.witness.push_back(t.to_string());
  rep.value = value.to_string();
  const T again = evaluate_identity<T>(rep.spec, tuple, true);
  rep.reverified = !again.is_zero() && again.to_string() == rep.value;
}

}  // namespace detail

/// All tuples from `pool` in lexicographic index order (first slot slowest).
template <AlgebraElement T>
PiSearchReport search_exhaustive(const IdentitySpec& spec, const std::vector<T>& pool, std::uint64_t budget) {
  PiSearchReport rep{.spec = spec, .strategy = "exhaustive", .pool_size = pool.size(), .budget = budget};
  const std::uint32_t m = spec.arity;
  if (pool.empty()) throw Error(Errc::ArityMismatch, "empty search pool");
  std::vector<std::size_t> idx(m, 0);
  std::uint64_t index = 0;
  while (true) {
    if (rep.tried >= budget) {
      rep.outcome = "budget-exceeded";
      return rep;
    }
    std::vector<T> tuple;
    for (std::size_t i : idx) tuple.push_back(pool[i]);
    const T v = evaluate_identity<T>(spec, tuple);
    ++rep.tried;
    if (!v.is_zero()) {
      detail::record(rep, index, tuple, v);
      return rep;
    }
    ++index;
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        rep.outcome = "no-counterexample-found";
        return rep;
      }
    }
  }
}

/// `draw(rng)` produces one argument; tuples are drawn left to right.
template <class Draw>
auto search_sampled(const IdentitySpec& spec, Draw draw, std::uint64_t budget, std::uint64_t seed) -> PiSearchReport {
  using T = std::decay_t<decltype(draw(std::declval<rings::Rng&>()))>;
  static_assert(AlgebraElement<T>);
  PiSearchReport rep{.spec = spec, .strategy = "sampled", .budget = budget, .seed = seed};
  rings::Rng rng(seed);
  for (std::uint64_t s = 0; s < budget; ++s) {
    std::vector<T> tuple;
    for (std::uint32_t i = 0; i < spec.arity; ++i) tuple.push_back(draw(rng));
    const T v = evaluate_identity<T>(spec, tuple);
    ++rep.tried;
    if (!v.is_zero()) {
      detail::record(rep, s, tuple, v);
      return rep;
    }
  }
  rep.outcome = "no-counterexample-found";
  return rep;
}

/// Matrix units for matrix rings, monomials of degree ≤ d for polynomial
/// rings, the basis for other finite rings, generators otherwise.
std::vector<rings::RingElem> ring_pool(const rings::RingPtr& ring, std::uint32_t degree = 2);
/// {m·x^e : m in ring_pool, e ≤ 1}.
std::vector<ore::OrePoly> ore_pool(const ore::ContextPtr& ctx, std::uint32_t degree = 2);

struct SearchOptions {
  bool exhaustive = false;
  std::uint64_t budget = 200;
  std::uint64_t seed = 0;
  std::uint32_t pool_degree = 2;
  std::uint32_t sample_degree = 2;
};

PiSearchReport identity_search(const ore::ContextPtr& ctx, const IdentitySpec& spec, const SearchOptions& options);
PiSearchReport identity_search(const rings::RingPtr& ring, const IdentitySpec& spec, const SearchOptions& options);
PiSearchReport commutator_power_check(const ore::ContextPtr& ctx, std::uint32_t k, const SearchOptions& options);

}  // namespace skewlab::pilab

#endif  // SKEWLAB_PILAB_IDENTITIES_HPP
