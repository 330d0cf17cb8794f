// Copyright 2026 The qrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "qrac/qrac_core.hpp"

namespace qrac {

// Sampling routines used by the optimizer, the verification campaigns and
// the test suites. Every distribution is documented here so an external
// reimplementation can reproduce the draws given the same seed stream.

/// Hermitian matrix with iid standard Gaussian entries: real on the
/// diagonal, complex (independent re/im) above it. Draw order: diagonal
/// entry, then the off-diagonal rest of each row.
inline HermitianMatrix random_hermitian(int dim, SplitMix64& rng) {
  HermitianMatrix h(dim);
  for (int j = 0; j < dim; ++j) {
    h.set(j, j, rng.next_gaussian());
    for (int k = j + 1; k < dim; ++k) h.set(j, k, cplx(rng.next_gaussian(), rng.next_gaussian()));
  }
  return h;
}

/// Full-rank density matrix G G^dag / Tr[G G^dag] with G an iid complex
/// Gaussian dim x dim matrix drawn row-major.
inline HermitianMatrix random_density(int dim, SplitMix64& rng) {
  std::vector<cplx> g(static_cast<std::size_t>(dim) * dim);
  for (auto& v : g) v = cplx(rng.next_gaussian(), rng.next_gaussian());
  HermitianMatrix rho(dim);
  for (int j = 0; j < dim; ++j)
    for (int k = j; k < dim; ++k) {
      cplx acc = 0.0;
      for (int l = 0; l < dim; ++l) acc += g[j * dim + l] * std::conj(g[k * dim + l]);
      rho.set(j, k, acc);
    }
  rho *= 1.0 / rho.trace();
  return rho;
}

inline BlochVector random_density_bloch(int dim, SplitMix64& rng) {
  return density_to_bloch(random_density(dim, rng));
}

/// Normalized complex Gaussian vector (entries drawn in index order).
inline std::vector<cplx> random_state_vector(int dim, SplitMix64& rng) {
  std::vector<cplx> v(dim);
  double norm2 = 0.0;
  for (auto& x : v) {
    x = cplx(rng.next_gaussian(), rng.next_gaussian());
    norm2 += std::norm(x);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

inline HermitianMatrix projector_from_state(const std::vector<cplx>& v) {
  const int dim = static_cast<int>(v.size());
  HermitianMatrix p(dim);
  for (int j = 0; j < dim; ++j)
    for (int k = j; k < dim; ++k) p.set(j, k, v[j] * std::conj(v[k]));
  return p;
}

inline BlochVector random_pure_bloch(int dim, SplitMix64& rng) {
  return density_to_bloch(projector_from_state(random_state_vector(dim, rng)));
}

/// Bloch vectors of two orthonormal pure states: the second Gaussian
/// vector is Gram-Schmidt-orthogonalized against the first.
inline std::pair<BlochVector, BlochVector> random_orthogonal_pure_pair(int dim, SplitMix64& rng) {
  const std::vector<cplx> v1 = random_state_vector(dim, rng);
  for (;;) {
    std::vector<cplx> v2(dim);
    for (auto& x : v2) x = cplx(rng.next_gaussian(), rng.next_gaussian());
    cplx proj = 0.0;
    for (int j = 0; j < dim; ++j) proj += std::conj(v1[j]) * v2[j];
    double norm2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      v2[j] -= proj * v1[j];
      norm2 += std::norm(v2[j]);
    }
    if (norm2 < 1e-12) continue;  // v2 was (numerically) parallel to v1; redraw
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v2) x *= inv;
    return {density_to_bloch(projector_from_state(v1)),
            density_to_bloch(projector_from_state(v2))};
  }
}

/// Valid two-outcome POVM: alpha0 uniform in [0.05, 0.95], a uniform
/// Gaussian direction for alpha, and a magnitude uniform in [0, t_max]
/// where t_max is the largest scale keeping both elements positive.
inline BinaryPovmBloch random_valid_povm(int m, SplitMix64& rng) {
  const int dim = 1 << m;
  const double alpha0 = 0.05 + 0.9 * rng.next_double();
  BlochVector dir = BlochVector::zero(dim);
  double norm2 = 0.0;
  for (int i = 0; i < dir.size(); ++i) {
    dir[i] = rng.next_gaussian();
    norm2 += dir[i] * dir[i];
  }
  dir *= 1.0 / std::sqrt(norm2);
  const GeneratorSet& gen = gellmann_generators(dim);
  HermitianMatrix a(dim);
  for (int i = 0; i < dir.size(); ++i) a.add_scaled(gen[i], dir[i]);
  const EigenDecomposition d = eigh(a);
  const double t_max =
      std::min(alpha0 / -d.eigenvalues.back(), (1.0 - alpha0) / d.eigenvalues.front());
  return BinaryPovmBloch(m, alpha0, dir * (rng.next_double() * t_max));
}

/// Point inside the outsphere that is not a valid Bloch vector: a valid
/// vector rescaled past its boundary radius, redrawn until the smallest
/// eigenvalue of rho(z) is below -1e-6. Requires dim >= 3; at dimension 2
/// the Bloch body coincides with the outsphere ball and no such point
/// exists.
inline BlochVector random_invalid_point(int dim, SplitMix64& rng) {
  if (dim < 3)
    throw ValidationError(
        "random_invalid_point: every point of the outsphere ball is a state at dimension 2");
  const GeometryConstants g = geometry_constants(dim);
  for (int attempt = 0; attempt < 100; ++attempt) {
    BlochVector beta = random_density_bloch(dim, rng);
    const double norm = beta.norm();
    if (norm < 1e-6) continue;
    const BlochVector u = beta * (1.0 / norm);
    const double t_star = boundary_radius(u);
    const double c = t_star + (0.01 + 0.99 * rng.next_double()) * (g.R - t_star);
    const BlochVector z = u * c;
    if (min_eigenvalue(bloch_to_density(z)) < -1e-6) return z;
  }
  throw NumericError("random_invalid_point: rejection sampling failed to converge");
}

/// Valid strategy with density-sampled encodings and random valid POVMs.
inline QracStrategy random_strategy(int n, int m, SplitMix64& rng) {
  QracStrategy s;
  s.n = n;
  s.m = m;
  const int count = 1 << n;
  s.encodings.reserve(count);
  for (int x = 0; x < count; ++x) s.encodings.push_back(random_density_bloch(1 << m, rng));
  s.measurements.reserve(n);
  for (int i = 0; i < n; ++i) s.measurements.push_back(random_valid_povm(m, rng));
  return s;
}

}  // namespace qrac
