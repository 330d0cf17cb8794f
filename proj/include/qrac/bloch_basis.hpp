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
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qrac/hermitian.hpp"

namespace qrac {

/// Real coordinate vector of length N^2-1 in the canonical generator
/// basis. Not every such vector is a state: membership in Bloch space is
/// a separate predicate, and raw geometric points are first-class values.
class BlochVector {
 public:
  BlochVector(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
    if (dim_ < 2)
      throw ValidationError("BlochVector: dimension must be >= 2, got " + std::to_string(dim_));
    if (static_cast<int>(coords_.size()) != dim_ * dim_ - 1)
      throw ValidationError("BlochVector: expected " + std::to_string(dim_ * dim_ - 1) +
                            " coordinates for dimension " + std::to_string(dim_) + ", got " +
                            std::to_string(coords_.size()));
  }

  static BlochVector zero(int dim) {
    return BlochVector(dim, std::vector<double>(static_cast<std::size_t>(dim) * dim - 1, 0.0));
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  double& operator[](int i) { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  double norm() const {
    double s = 0.0;
    for (double x : coords_) s += x * x;
    return std::sqrt(s);
  }

  BlochVector& operator+=(const BlochVector& o) {
    require_same_dim(o);
    for (int i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }

  BlochVector& operator-=(const BlochVector& o) {
    require_same_dim(o);
    for (int i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }

  BlochVector& operator*=(double c) {
    for (double& x : coords_) x *= c;
    return *this;
  }

  friend BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
  friend BlochVector operator-(BlochVector a, const BlochVector& b) { return a -= b; }
  friend BlochVector operator*(double c, BlochVector a) { return a *= c; }
  friend BlochVector operator*(BlochVector a, double c) { return a *= c; }

  void require_same_dim(const BlochVector& o) const {
    if (o.dim_ != dim_)
      throw ValidationError("BlochVector: dimension mismatch " + std::to_string(dim_) + " vs " +
                            std::to_string(o.dim_));
  }

 private:
  int dim_;
  std::vector<double> coords_;
};

inline double inner(const BlochVector& a, const BlochVector& b) {
  a.require_same_dim(b);
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// The N^2-1 generalized Gell-Mann generators in canonical order:
/// symmetric off-diagonal pairs (j<k, lexicographic), then antisymmetric
/// pairs in the same order, then the N-1 diagonal generators. Traceless,
/// Tr[s_i s_j] = 2 delta_ij. For N=2 this is exactly (X, Y, Z).
class GeneratorSet {
 public:
  explicit GeneratorSet(int dim) : dim_(check_dim(dim)) {
    generators_.reserve(static_cast<std::size_t>(dim) * dim - 1);
    for (int j = 0; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        HermitianMatrix m(dim);
        m.set(j, k, cplx(1.0, 0.0));
        generators_.push_back(std::move(m));
      }
    for (int j = 0; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        HermitianMatrix m(dim);
        m.set(j, k, cplx(0.0, -1.0));
        generators_.push_back(std::move(m));
      }
    for (int l = 1; l < dim; ++l) {
      HermitianMatrix m(dim);
      const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
      for (int j = 0; j < l; ++j) m.set(j, j, scale);
      m.set(l, l, -scale * l);
      generators_.push_back(std::move(m));
    }
  }

  int dim() const { return dim_; }
  int count() const { return static_cast<int>(generators_.size()); }
  const HermitianMatrix& operator[](int i) const { return generators_[i]; }

 private:
  static int check_dim(int dim) {
    if (dim < 2 || dim > 16)
      throw ValidationError("GeneratorSet: dimension must be in [2, 16], got " +
                            std::to_string(dim));
    return dim;
  }

  int dim_;
  std::vector<HermitianMatrix> generators_;
};

/// Shared per-dimension generator sets; built once, immutable afterwards.
inline const GeneratorSet& gellmann_generators(int dim) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GeneratorSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end())
    it = cache.emplace(dim, std::make_unique<GeneratorSet>(dim)).first;
  return *it->second;
}

/// rho(beta) = I/N + (1/2) sum_i beta_i s_i. Trace-one and Hermitian for
/// any input; positivity is deliberately not required, so invalid
/// geometric points map to non-positive trace-one matrices.
inline HermitianMatrix bloch_to_density(const BlochVector& beta) {
  const int n = beta.dim();
  const GeneratorSet& gen = gellmann_generators(n);
  HermitianMatrix rho = HermitianMatrix::identity(n);
  rho *= 1.0 / n;
  for (int i = 0; i < beta.size(); ++i)
    if (beta[i] != 0.0) rho.add_scaled(gen[i], 0.5 * beta[i]);
  return rho;
}

/// Inverse map, beta_i = Tr[rho s_i]; requires trace one within 1e-9.
inline BlochVector density_to_bloch(const HermitianMatrix& rho) {
  const int n = rho.dim();
  if (std::abs(rho.trace() - 1.0) > 1e-9)
    throw ValidationError("density_to_bloch: trace must be 1 within 1e-9, got " +
                          std::to_string(rho.trace()));
  const GeneratorSet& gen = gellmann_generators(n);
  std::vector<double> coords(static_cast<std::size_t>(n) * n - 1);
  for (int i = 0; i < gen.count(); ++i) coords[i] = trace_product(rho, gen[i]);
  return BlochVector(n, std::move(coords));
}

/// Tr[rho(b1) rho(b2)] evaluated in coordinates: 1/N + <b1, b2>/2.
inline double overlap(const BlochVector& b1, const BlochVector& b2) {
  b1.require_same_dim(b2);
  return 1.0 / b1.dim() + 0.5 * inner(b1, b2);
}

}  // namespace qrac
