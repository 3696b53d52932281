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

#ifndef SKEWLAB_TWISTS_ANALYSIS_HPP
#define SKEWLAB_TWISTS_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/twists/endo.hpp"

namespace skewlab::twists {

inline constexpr std::size_t kDefaultDerivSamples = 64;

enum class Tri { False, True, Unknown };
std::string_view tri_name(Tri t);

struct LawFailure {
  std::string law;     // e.g. "sigma-multiplicative", "leibniz"
  std::string detail;  // rendered inputs and both sides
};

struct TwistReport {
  bool pass = true;
  std::size_t generator_pairs = 0;
  std::size_t sampled_pairs = 0;
  std::uint64_t seed = 0;
  std::optional<LawFailure> failure;
  Tri injective = Tri::Unknown;
  std::string injectivity_method;  // variable-map rule | jacobian rule | rank | kind rule | undecided
};

/// Homomorphism law for σ and Leibniz law for δ on all generator pairs plus
/// `samples` seeded pairs; injectivity decided where an exact rule exists.
/// Never throws for law failures; they are reported.
TwistReport validate_twist(const Endo& sigma, const SigmaDeriv& delta, std::size_t samples, std::uint64_t seed);

std::optional<LawFailure> check_leibniz(const SigmaDeriv& delta, std::size_t samples, std::uint64_t seed);

/// Exact injectivity decision (or Unknown) with the rule used.
std::pair<Tri, std::string> decide_injective(const Endo& sigma);

/// Least n ≤ bound with σ^n = id on the center; Unsupported without a
/// center description.
std::optional<std::uint32_t> endo_order_on_center(const Endo& sigma, std::uint32_t bound);

struct FixedSubalgebra {
  std::vector<Value> basis;
  std::vector<Value> center_basis;
};

/// {z ∈ Z(R) : σ(z) = z, δ(z) = 0}.  Throws CenterNotStable, Unsupported.
FixedSubalgebra fixed_subalgebra(const Endo& sigma, const SigmaDeriv& delta);

struct WitnessOptions {
  /// Number of leading kernel vectors combined with 0/±1 coefficients.
  std::size_t scan_dimension = 6;
};

/// Invertible u with u·τ(r) = r·u for all r, i.e. τ(r) = u^{-1} r u, first
/// nonzero coordinate normalized to 1; none when τ is not inner.
std::optional<Value> inner_auto_witness(const Endo& tau, const WitnessOptions& options = {});

struct InnerWitness {
  Value u;
  bool sigma_fixed = false;
  /// w·σ(w)·…·σ^{n-1}(w) for the unconstrained witness w, when σ-fixed.
  std::optional<Value> norm_form;
};

/// Witness for τ = σ^n, preferring one with σ(u) = u.  Throws
/// PreconditionViolation when σ^n ≠ τ on the basis.
std::optional<InnerWitness> inner_auto_witness(const Endo& tau, const Endo& sigma, std::uint32_t n,
                                               const WitnessOptions& options = {});

/// Coordinate matrix of σ over the ring's basis (column k = σ(b_k)).
rings::ScalarMatrix endo_matrix(const Endo& sigma);

}  // namespace skewlab::twists

#endif  // SKEWLAB_TWISTS_ANALYSIS_HPP
