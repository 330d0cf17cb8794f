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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qrac/errors.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

using cplx = std::complex<double>;

/// Dense complex Hermitian matrix. The storage is kept exactly Hermitian:
/// every mutation writes the mirrored conjugate entry, and the validating
/// factory symmetrizes after checking the input against HERM_TOL.
class HermitianMatrix {
 public:
  /// Zero matrix of the given dimension (1 <= dim <= 64).
  explicit HermitianMatrix(int dim) : dim_(dim), a_(check_dim(dim) * dim) {}

  static HermitianMatrix identity(int dim) {
    HermitianMatrix m(dim);
    for (int j = 0; j < dim; ++j) m.a_[j * dim + j] = 1.0;
    return m;
  }

  /// Builds a matrix from row-major entries, rejecting inputs whose
  /// Hermiticity violation exceeds HERM_TOL. Accepted input is
  /// symmetrized so the stored matrix is Hermitian to the last bit.
  static HermitianMatrix from_entries(int dim, const std::vector<cplx>& entries) {
    check_dim(dim);
    if (static_cast<int>(entries.size()) != dim * dim)
      throw ValidationError("HermitianMatrix: expected " + std::to_string(dim * dim) +
                            " entries, got " + std::to_string(entries.size()));
    for (int j = 0; j < dim; ++j)
      for (int k = j; k < dim; ++k) {
        const cplx delta = entries[j * dim + k] - std::conj(entries[k * dim + j]);
        if (std::abs(delta) > HERM_TOL)
          throw ValidationError("HermitianMatrix: entry (" + std::to_string(j) + "," +
                                std::to_string(k) + ") violates Hermiticity by " +
                                std::to_string(std::abs(delta)));
      }
    HermitianMatrix m(dim);
    for (int j = 0; j < dim; ++j) {
      m.a_[j * dim + j] = entries[j * dim + j].real();
      for (int k = j + 1; k < dim; ++k) {
        const cplx v = 0.5 * (entries[j * dim + k] + std::conj(entries[k * dim + j]));
        m.a_[j * dim + k] = v;
        m.a_[k * dim + j] = std::conj(v);
      }
    }
    return m;
  }

  int dim() const { return dim_; }

  const cplx& operator()(int j, int k) const { return a_[j * dim_ + k]; }

  /// Sets entry (j,k) and mirrors the conjugate into (k,j); a diagonal
  /// write keeps only the real part.
  void set(int j, int k, cplx v) {
    if (j == k) {
      a_[j * dim_ + j] = v.real();
    } else {
      a_[j * dim_ + k] = v;
      a_[k * dim_ + j] = std::conj(v);
    }
  }

  HermitianMatrix& operator+=(const HermitianMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  HermitianMatrix& operator-=(const HermitianMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }

  HermitianMatrix& operator*=(double c) {
    for (auto& v : a_) v *= c;
    return *this;
  }

  /// *this += c * o
  void add_scaled(const HermitianMatrix& o, double c) {
    require_same_dim(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * o.a_[i];
  }

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double c, HermitianMatrix a) { return a *= c; }
  friend HermitianMatrix operator*(HermitianMatrix a, double c) { return a *= c; }

  double trace() const {
    double t = 0.0;
    for (int j = 0; j < dim_; ++j) t += a_[j * dim_ + j].real();
    return t;
  }

  const std::vector<cplx>& entries() const { return a_; }

 private:
  static int check_dim(int dim) {
    if (dim < 1 || dim > 64)
      throw ValidationError("HermitianMatrix: dimension must be in [1, 64], got " +
                            std::to_string(dim));
    return dim;
  }

  void require_same_dim(const HermitianMatrix& o) const {
    if (o.dim_ != dim_)
      throw ValidationError("HermitianMatrix: dimension mismatch " + std::to_string(dim_) +
                            " vs " + std::to_string(o.dim_));
  }

  int dim_;
  std::vector<cplx> a_;
};

/// Tr[A B] for Hermitian A, B (real by symmetry).
inline double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim())
    throw ValidationError("trace_product: dimension mismatch");
  const int n = a.dim();
  double t = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t += (a(j, k) * b(k, j)).real();
  return t;
}

/// A*A, assembled from the lower triangle so the result stays Hermitian.
inline HermitianMatrix hermitian_square(const HermitianMatrix& a) {
  const int n = a.dim();
  HermitianMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      cplx acc = 0.0;
      for (int l = 0; l < n; ++l) acc += a(j, l) * a(l, k);
      out.set(j, k, acc);
    }
  return out;
}

/// max_jk |A_jk - B_jk|
inline double max_abs_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim())
    throw ValidationError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int j = 0; j < a.dim(); ++j)
    for (int k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a(j, k) - b(j, k)));
  return m;
}

/// Spectrum sorted descending plus the matching orthonormal eigenvectors;
/// column k of `eigenvectors` pairs with `eigenvalues[k]`.
struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<cplx> eigenvectors;  // row-major dim x dim

  cplx vector_entry(int row, int k) const { return eigenvectors[row * dim + k]; }

  std::vector<cplx> column(int k) const {
    std::vector<cplx> v(dim);
    for (int row = 0; row < dim; ++row) v[row] = eigenvectors[row * dim + k];
    return v;
  }
};

namespace detail {

inline double offdiag_norm(const std::vector<cplx>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
  return std::sqrt(2.0 * s);
}

// Cyclic-by-row Jacobi diagonalization for complex Hermitian matrices.
// The sweep order, rotation formulas and termination rule are fixed, so
// identical input yields bit-identical output. Rotations touch rows and
// columns (p,q) only; the matrix stays exactly Hermitian because mirrored
// entries are written as conjugates and the pivot is zeroed explicitly.
inline void jacobi_diagonalize(std::vector<cplx>& a, int n, std::vector<cplx>* v) {
  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, cplx(0.0));
    for (int j = 0; j < n; ++j) (*v)[j * n + j] = 1.0;
  }
  double off = offdiag_norm(a, n);
  for (int sweep = 0; sweep < JACOBI_MAX_SWEEPS && off >= JACOBI_OFF_TOL; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a[p * n + q];
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sigma = t * c;
        const cplx s = (sigma / abs_apq) * apq;  // sigma * e^{i arg(apq)}
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = a[k * n + p];
          const cplx akq = a[k * n + q];
          a[k * n + p] = c * akp - std::conj(s) * akq;
          a[k * n + q] = s * akp + c * akq;
          a[p * n + k] = std::conj(a[k * n + p]);
          a[q * n + k] = std::conj(a[k * n + q]);
        }
        a[p * n + p] = c * c * app + sigma * sigma * aqq - 2.0 * c * sigma * abs_apq;
        a[q * n + q] = sigma * sigma * app + c * c * aqq + 2.0 * c * sigma * abs_apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (v) {
          for (int k = 0; k < n; ++k) {
            const cplx vkp = (*v)[k * n + p];
            const cplx vkq = (*v)[k * n + q];
            (*v)[k * n + p] = c * vkp - std::conj(s) * vkq;
            (*v)[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    off = offdiag_norm(a, n);
  }
  if (off >= JACOBI_OFF_TOL)
    throw NumericError("eigh: Jacobi sweeps exhausted with off-diagonal residual " +
                       std::to_string(off));
}

// Indices 0..n-1 reordered so eigenvalues come out descending; stable, so
// equal eigenvalues keep their sweep order.
inline std::vector<int> descending_order(const std::vector<cplx>& diag, int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return diag[x * n + x].real() > diag[y * n + y].real(); });
  return idx;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
inline EigenDecomposition eigh(const HermitianMatrix& h) {
  const int n = h.dim();
  std::vector<cplx> a = h.entries();
  std::vector<cplx> v;
  detail::jacobi_diagonalize(a, n, &v);
  const std::vector<int> order = detail::descending_order(a, n);
  EigenDecomposition d;
  d.dim = n;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    d.eigenvalues[k] = a[order[k] * n + order[k]].real();
    for (int row = 0; row < n; ++row) d.eigenvectors[row * n + k] = v[row * n + order[k]];
  }
  return d;
}

/// Smallest eigenvalue; runs the same sweeps as eigh but skips the
/// eigenvector accumulation, so the value matches eigh bit for bit.
inline double min_eigenvalue(const HermitianMatrix& h) {
  const int n = h.dim();
  std::vector<cplx> a = h.entries();
  detail::jacobi_diagonalize(a, n, nullptr);
  double lo = a[0].real();
  for (int j = 1; j < n; ++j) lo = std::min(lo, a[j * n + j].real());
  return lo;
}

enum class EigenSelector {
  Top,          // rank-1 projector onto the leading eigenvector
  NonNegative,  // projector onto the span of eigenvalue >= 0 (zero included)
};

namespace detail {

// Canonical representative of a (possibly degenerate) top eigenspace:
// among the tied eigenvectors, take the one with the largest leading
// coordinate in absolute value, break remaining ties lexicographically by
// (re, im) component pairs, and fix the phase so the leading coordinate is
// real positive.
inline std::vector<cplx> canonical_top_vector(const EigenDecomposition& d) {
  const int n = d.dim;
  const double tie_tol = 1e-12 * std::max(1.0, std::abs(d.eigenvalues[0]));
  int tied = 1;
  while (tied < n && d.eigenvalues[0] - d.eigenvalues[tied] <= tie_tol) ++tied;

  auto normalized = [&](int k) {
    std::vector<cplx> w = d.column(k);
    int lead = 0;
    while (lead < n && std::abs(w[lead]) <= 1e-12) ++lead;
    if (lead == n) return std::make_pair(w, 0.0);  // defensive: null column
    const cplx phase = std::conj(w[lead]) / std::abs(w[lead]);
    for (auto& x : w) x *= phase;
    return std::make_pair(w, std::abs(w[lead]));
  };

  auto lex_greater = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].real() != y[i].real()) return x[i].real() > y[i].real();
      if (x[i].imag() != y[i].imag()) return x[i].imag() > y[i].imag();
    }
    return false;
  };

  auto [best, best_lead] = normalized(0);
  for (int k = 1; k < tied; ++k) {
    auto [w, lead] = normalized(k);
    if (lead > best_lead || (lead == best_lead && lex_greater(w, best))) {
      best = std::move(w);
      best_lead = lead;
    }
  }
  return best;
}

}  // namespace detail

/// Orthogonal projector onto the selected eigenspace. The result is built
/// from the lower triangle and mirrored, hence exactly Hermitian.
inline HermitianMatrix eigenspace_projector(const HermitianMatrix& h, EigenSelector sel) {
  const int n = h.dim();
  const EigenDecomposition d = eigh(h);
  HermitianMatrix p(n);
  if (sel == EigenSelector::Top) {
    const std::vector<cplx> v = detail::canonical_top_vector(d);
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) p.set(j, k, v[j] * std::conj(v[k]));
    return p;
  }
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      cplx acc = 0.0;
      for (int e = 0; e < n; ++e)
        if (d.eigenvalues[e] >= 0.0) acc += d.vector_entry(j, e) * std::conj(d.vector_entry(k, e));
      p.set(j, k, acc);
    }
  return p;
}

}  // namespace qrac
