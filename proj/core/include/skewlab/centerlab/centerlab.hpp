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

#ifndef SKEWLAB_CENTERLAB_CENTERLAB_HPP
#define SKEWLAB_CENTERLAB_CENTERLAB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/ore/orepoly.hpp"
#include "skewlab/twists/analysis.hpp"

namespace skewlab::centerlab {

using ore::OrePoly;
using rings::RingPtr;
using rings::Value;
using twists::Endo;
using twists::SigmaDeriv;

/// Flags for a nonconstant f with leading coefficient a and degree n.
struct LeadingCriteria {
  bool applicable = false;       // false for constants
  bool sigma_fixed = false;      // σ(a) = a
  bool twisted_commute = false;  // r·a = a·σ^n(r) on generators
  bool regular = false;          // a is regular
  std::optional<Value> failing_generator;
};

struct CentralityReport {
  bool central = false;
  int degree = -1;
  Value lead;
  /// Element that fails to commute with f ("x" or a rendered generator) and [f, it].
  std::optional<std::string> counterexample;
  std::optional<OrePoly> commutator;
  LeadingCriteria criteria;
  /// The ring's generator list spans it as a ring (false for representative lists).
  bool generators_complete = true;
};

CentralityReport is_central(const OrePoly& f);
LeadingCriteria central_leading_checks(const OrePoly& f);

struct SemiInvarianceReport {
  bool semi_invariant = false;
  std::vector<std::pair<Value, Value>> witnesses;  // (a, b) with p·a = b·p
  std::optional<Value> failure;
};

SemiInvarianceReport semi_invariant_solve(const OrePoly& p);

struct QuasiAlgebraicWitness {
  std::uint32_t n = 0;
  std::vector<Value> a;  // a_1 … a_n
  Value b;
  bool verified = false;
};

std::optional<QuasiAlgebraicWitness> quasi_algebraic_solve(const SigmaDeriv& delta, std::uint32_t n_max);
/// Re-checks Σ a_i δ^i(r) = b·r − σ^n(r)·b on every basis element.
bool verify_quasi_algebraic(const SigmaDeriv& delta, const QuasiAlgebraicWitness& w);

struct OrbitDecomposition {
  std::vector<std::size_t> rho;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<RingPtr> blocks;
  std::vector<Endo> block_sigma;
  std::vector<SigmaDeriv> block_delta;
  std::vector<std::optional<Value>> witnesses;  // filled by with_witnesses
  bool sigma_flag = false;  // σ(B_i) ⊆ B_{ρ(i)}
  bool delta_flag = false;  // δ(B_i) ⊆ B_i + B_{ρ(i)}
};

OrbitDecomposition orbit_decompose(const RingPtr& ring, const Endo& sigma, const SigmaDeriv& delta);
std::optional<Value> inner_delta_witness(const OrbitDecomposition& dec, std::size_t j);
/// inner_delta_witness on every orbit of size > 1 with a finite basis.
void with_witnesses(OrbitDecomposition& dec);

/// Solves δ(r) = b·r − σ(r)·b over a finite basis.
std::optional<Value> solve_inner_adjoint(const SigmaDeriv& delta);

struct UdimReport {
  std::vector<Value> fixed_basis;
  std::vector<Value> idempotents;
  std::vector<std::size_t> field_degree;  // dim of K_i over the prime field
  std::vector<std::size_t> dims;          // dim_{K_i}(e_i Z)
  std::size_t total = 0;
};

inline constexpr std::size_t kUdimMaxDimension = 12;

UdimReport udim_over_fixed(const Endo& sigma, const SigmaDeriv& delta);

struct KernelChainReport {
  /// kernels[k] lists the variables generating ker σ^k, k = 0, 1, …
  std::vector<std::vector<std::size_t>> kernels;
  std::size_t n = 0;
  bool stabilized = false;
  bool unbounded_family = false;
};

KernelChainReport kernel_chain(const Endo& sigma, std::uint32_t bound);

struct PipelineBounds {
  std::uint32_t order = 24;
  std::uint32_t kernel = 32;
  std::uint32_t certificate_degree = 36;
};

struct PipelineReport {
  std::string path;     // semisimple | noetherian
  std::string verdict;  // PI | not-PI | unknown
  std::optional<std::uint32_t> order;
  std::optional<std::string> certificate;  // rendered central polynomial
  bool certificate_verified = false;
  std::optional<KernelChainReport> chain;
  std::vector<std::size_t> surviving;            // variables of R/ker σ^n
  std::optional<std::uint32_t> nilpotency_exponent;  // [x1,x2]^{n+1} = 0
  std::string note;
};

PipelineReport pi_decide_pipeline(const Endo& sigma, const SigmaDeriv& delta, const PipelineBounds& bounds = {});

struct JordanProbe {
  Value element;
  std::optional<std::uint32_t> level;  // least i with σ^i(a) ∈ R
  bool ascending = true;               // σ^j(a) ∈ R for level ≤ j ≤ depth
};

struct JordanReport {
  std::vector<JordanProbe> probes;
  std::uint32_t depth = 0;
  bool chain_ascending = true;
};

JordanReport jordan_closure_probe(const Endo& sigma, const std::vector<Value>& probes, std::uint32_t depth);

}  // namespace skewlab::centerlab

#endif  // SKEWLAB_CENTERLAB_CENTERLAB_HPP
