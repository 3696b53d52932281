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

#include "skewlab/centerlab/centerlab.hpp"

#include "skewlab/error.hpp"
#include "skewlab/rings/solve.hpp"

namespace skewlab::centerlab {

using rings::Ring;
using rings::Scalar;
using rings::ScalarMatrix;
using rings::ScalarVector;

namespace {

ScalarVector stacked_coords(const Ring& ring, const std::vector<Value>& values) {
  ScalarVector out;
  for (const Value& v : values) {
    auto c = ring.coords(v);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Value> padded(const OrePoly& p, std::size_t length) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(p.coeff(i));
  return out;
}

}  // namespace

SemiInvarianceReport semi_invariant_solve(const OrePoly& p) {
  const auto& ctx = p.context();
  const Ring& ring = *ctx->ring();
  rings::require_finite_basis(ring, "semi-invariance");
  const auto basis = ring.basis();
  SemiInvarianceReport rep;
  rep.semi_invariant = true;
  for (const Value& a : ring.generators()) {
    const OrePoly pa = p * OrePoly::constant(ctx, a);
    const std::size_t len = static_cast<std::size_t>(std::max(pa.degree(), p.degree()) + 1);
    const ScalarMatrix m = rings::stacked_columns(ring, basis.size(), [&](std::size_t k) {
      std::vector<Value> col;
      for (std::size_t i = 0; i < len; ++i) col.push_back(ring.mul(basis[k], p.coeff(i)));
      return col;
    });
    const auto sol = rings::solve(m, stacked_coords(ring, padded(pa, len)));
    if (!sol) {
      rep.semi_invariant = false;
      rep.failure = a;
      rep.witnesses.clear();
      return rep;
    }
    rep.witnesses.emplace_back(a, rings::combine(ring, *sol, basis));
  }
  return rep;
}

bool verify_quasi_algebraic(const SigmaDeriv& delta, const QuasiAlgebraicWitness& w) {
  const Ring& ring = *delta.ring();
  for (const Value& r : ring.basis()) {
    Value lhs = ring.zero();
    Value d = r;
    for (std::uint32_t i = 1; i <= w.n; ++i) {
      d = delta(d);
      lhs = ring.add(lhs, ring.mul(w.a[i - 1], d));
    }
    const Value rhs = ring.sub(ring.mul(w.b, r), ring.mul(delta.sigma().apply_power(r, w.n), w.b));
    if (!ring.equal(lhs, rhs)) return false;
  }
  return true;
}

std::optional<QuasiAlgebraicWitness> quasi_algebraic_solve(const SigmaDeriv& delta, std::uint32_t n_max) {
  const Ring& ring = *delta.ring();
  rings::require_finite_basis(ring, "quasi-algebraic solve");
  const auto basis = ring.basis();
  const std::size_t d = basis.size();
  // powers[i][r] = δ^i(basis[r])
  std::vector<std::vector<Value>> powers{basis};
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    std::vector<Value> next;
    for (const Value& v : powers.back()) next.push_back(delta(v));
    powers.push_back(std::move(next));
    std::vector<Value> sigma_n;
    for (const Value& r : basis) sigma_n.push_back(delta.sigma().apply_power(r, n));

    // Unknowns: a_1 … a_n (d coordinates each), then b.
    const auto column = [&](std::size_t k) {
      std::vector<Value> col;
      const std::size_t block = k / d;
      const Value& e = basis[k % d];
      for (std::size_t r = 0; r < d; ++r) {
        if (block < n) {
          col.push_back(ring.mul(e, powers[block + 1][r]));
        } else {
          col.push_back(ring.sub(ring.mul(sigma_n[r], e), ring.mul(e, basis[r])));
        }
      }
      return col;
    };
    const ScalarMatrix full = rings::stacked_columns(ring, (n + 1) * d, column);

    std::optional<ScalarVector> sol;
    // Prefer a_n = 1: move its column to the right-hand side.
    {
      const ScalarVector one = stacked_coords(ring, {ring.one()});
      ScalarVector rhs(full.rows(), ring.coord_zero());
      for (std::size_t c = 0; c < d; ++c) {
        if (one[c].is_zero()) continue;
        for (std::size_t row = 0; row < full.rows(); ++row) rhs[row] = rhs[row] - full.at(row, (n - 1) * d + c) * one[c];
      }
      ScalarMatrix reduced(full.rows(), n * d, ring.coord_zero());
      for (std::size_t row = 0; row < full.rows(); ++row) {
        for (std::size_t col = 0, out = 0; col < (n + 1) * d; ++col) {
          if (col / d == n - 1) continue;
          reduced.at(row, out++) = full.at(row, col);
        }
      }
      if (auto part = rings::solve(reduced, rhs)) {
        ScalarVector v;
        v.insert(v.end(), part->begin(), part->begin() + static_cast<std::ptrdiff_t>((n - 1) * d));
        v.insert(v.end(), one.begin(), one.end());
        v.insert(v.end(), part->begin() + static_cast<std::ptrdiff_t>((n - 1) * d), part->end());
        sol = std::move(v);
      }
    }
    if (!sol) {
      for (auto& v : rings::nullspace(full)) {
        const bool lead_nonzero = !rings::is_zero_vector(
            std::span<const Scalar>(v.data() + (n - 1) * d, d));
        if (lead_nonzero) {
          sol = std::move(v);
          break;
        }
      }
    }
    if (!sol) continue;
    QuasiAlgebraicWitness w;
    w.n = n;
    for (std::size_t i = 0; i <= n; ++i) {
      Value v = rings::combine(ring, std::span<const Scalar>(sol->data() + i * d, d), basis);
      if (i < n) {
        w.a.push_back(std::move(v));
      } else {
        w.b = std::move(v);
      }
    }
    w.verified = verify_quasi_algebraic(delta, w);
    return w;
  }
  return std::nullopt;
}

std::optional<Value> solve_inner_adjoint(const SigmaDeriv& delta) {
  const Ring& ring = *delta.ring();
  rings::require_finite_basis(ring, "inner adjoint solve");
  const auto basis = ring.basis();
  const ScalarMatrix m = rings::stacked_columns(ring, basis.size(), [&](std::size_t k) {
    std::vector<Value> col;
    for (const Value& r : basis) col.push_back(ring.sub(ring.mul(basis[k], r), ring.mul(delta.sigma()(r), basis[k])));
    return col;
  });
  std::vector<Value> images;
  for (const Value& r : basis) images.push_back(delta(r));
  const auto sol = rings::solve(m, stacked_coords(ring, images));
  if (!sol) return std::nullopt;
  return rings::combine(ring, *sol, basis);
}

std::optional<Value> inner_delta_witness(const OrbitDecomposition& dec, std::size_t j) {
  if (j >= dec.orbits.size()) throw Error(Errc::PreconditionViolation, "no orbit " + std::to_string(j));
  if (dec.orbits[j].size() < 2) {
    throw Error(Errc::PreconditionViolation, "orbit " + std::to_string(j) + " is a singleton");
  }
  return solve_inner_adjoint(dec.block_delta[j]);
}

void with_witnesses(OrbitDecomposition& dec) {
  dec.witnesses.assign(dec.orbits.size(), std::nullopt);
  for (std::size_t j = 0; j < dec.orbits.size(); ++j) {
    if (dec.orbits[j].size() < 2 || !dec.blocks[j]->dimension()) continue;
    dec.witnesses[j] = inner_delta_witness(dec, j);
  }
}

}  // namespace skewlab::centerlab
