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

#include <cmath>
#include <string>
#include <utility>

#include "qrac/bloch_basis.hpp"

namespace qrac {

/// Radii of the largest origin-centered ball inside Bloch space (r) and
/// the smallest one containing it (R). Their product is 2/N.
struct GeometryConstants {
  int dim;
  double R;  // outsphere radius, sqrt(2(N-1)/N)
  double r;  // insphere radius, 2/(N R)
};

inline GeometryConstants geometry_constants(int n) {
  if (n < 2 || n > 16)
    throw ValidationError("geometry_constants: dimension must be in [2, 16], got " +
                          std::to_string(n));
  const double R = std::sqrt(2.0 * (n - 1) / n);
  const double target = 2.0 / n;
  // r is the representable neighbor of 2/(N R) whose product with R rounds
  // exactly to 2/N, so the dual-radius identity holds bit for bit.
  double r = target / R;
  if (r * R != target) {
    if (std::nextafter(r, 2.0) * R == target)
      r = std::nextafter(r, 2.0);
    else if (std::nextafter(r, 0.0) * R == target)
      r = std::nextafter(r, 0.0);
  }
  return GeometryConstants{n, R, r};
}

/// Membership test: beta is a Bloch vector iff rho(beta) is positive
/// semidefinite, i.e. its smallest eigenvalue is >= -tol.
inline bool is_valid_bloch(const BlochVector& beta, double tol = PSD_TOL) {
  return min_eigenvalue(bloch_to_density(beta)) >= -tol;
}

/// Half-space membership <z, beta> >= -2/N. The supporting vector beta
/// must itself be a valid Bloch vector; z may be any point.
inline bool halfspace_contains(const BlochVector& z, const BlochVector& beta) {
  z.require_same_dim(beta);
  if (!is_valid_bloch(beta))
    throw ValidationError("halfspace_contains: the supporting vector is not a valid Bloch vector");
  return inner(z, beta) >= -2.0 / beta.dim() - 1e-12;
}

/// The two boundary points obtained by rescaling beta with the extreme
/// eigenvalues of rho(beta): beta/(1 - N lmax) lands on the far side of
/// the origin (the denominator is negative), beta/(1 - N lmin) scales
/// outward along beta.
struct BoundaryScaling {
  BlochVector opposite;  // lambda_max branch
  BlochVector outward;   // lambda_min branch
};

inline BoundaryScaling boundary_scaling(const BlochVector& beta) {
  if (beta.norm() == 0.0)
    throw ValidationError("boundary_scaling: the zero vector has no boundary scaling");
  const int n = beta.dim();
  const EigenDecomposition d = eigh(bloch_to_density(beta));
  const double lmax = d.eigenvalues.front();
  const double lmin = d.eigenvalues.back();
  if (lmin < -PSD_TOL)
    throw ValidationError("boundary_scaling: input is not a valid Bloch vector");
  const double denom_max = 1.0 - n * lmax;
  const double denom_min = 1.0 - n * lmin;
  if (std::abs(denom_max) < 1e-10)
    throw DegenerateError("boundary_scaling: lambda_max branch degenerate, 1 - N*lambda_max = " +
                          std::to_string(denom_max));
  if (std::abs(denom_min) < 1e-10)
    throw DegenerateError("boundary_scaling: lambda_min branch degenerate, 1 - N*lambda_min = " +
                          std::to_string(denom_min));
  return BoundaryScaling{beta * (1.0 / denom_max), beta * (1.0 / denom_min)};
}

/// Distance from the origin to the boundary of Bloch space along the unit
/// direction u: t* = -1/(N a_min) with a_min the most negative eigenvalue
/// of (1/2) sum_i u_i s_i. Always lies in [r_N, R_N].
inline double boundary_radius(const BlochVector& u) {
  if (std::abs(u.norm() - 1.0) > 1e-12)
    throw ValidationError("boundary_radius: direction must be unit length, got norm " +
                          std::to_string(u.norm()));
  const int n = u.dim();
  const GeneratorSet& gen = gellmann_generators(n);
  HermitianMatrix h(n);
  for (int i = 0; i < u.size(); ++i)
    if (u[i] != 0.0) h.add_scaled(gen[i], 0.5 * u[i]);
  const double a_min = min_eigenvalue(h);
  return -1.0 / (n * a_min);
}

/// Midpoint of two orthogonal pure-state Bloch vectors together with its
/// boundary image on the far side of the origin. For N=2 the midpoint is
/// the origin and the second point is undefined (flag false, value zero).
struct MidpointConstruction {
  BlochVector mid;       // (beta1 + beta2)/2, norm sqrt(R^2 - 1)
  BlochVector opposite;  // -(rR/(R^2-1)) * mid, boundary point for N > 2
  bool opposite_defined;
};

inline MidpointConstruction midpoint_construction(const BlochVector& b1, const BlochVector& b2) {
  b1.require_same_dim(b2);
  const int n = b1.dim();
  const GeometryConstants g = geometry_constants(n);
  if (std::abs(b1.norm() - g.R) > 1e-9 || std::abs(b2.norm() - g.R) > 1e-9)
    throw ValidationError("midpoint_construction: inputs must be pure-state Bloch vectors");
  if (std::abs(overlap(b1, b2)) > 1e-9)
    throw ValidationError("midpoint_construction: inputs must be orthogonal (zero overlap)");
  BlochVector mid = 0.5 * (b1 + b2);
  if (n == 2) return MidpointConstruction{std::move(mid), BlochVector::zero(2), false};
  // -(rR/(R^2-1)) reduces to -2/(N-2).
  BlochVector opp = mid * (-2.0 / (n - 2.0));
  return MidpointConstruction{std::move(mid), std::move(opp), true};
}

/// Half the Euclidean distance between two valid Bloch vectors; at most 1,
/// with equality exactly for orthogonal pure-state pairs.
inline double pair_distance(const BlochVector& b1, const BlochVector& b2) {
  b1.require_same_dim(b2);
  if (!is_valid_bloch(b1) || !is_valid_bloch(b2))
    throw ValidationError("pair_distance: both inputs must be valid Bloch vectors");
  return 0.5 * (b1 - b2).norm();
}

}  // namespace qrac
