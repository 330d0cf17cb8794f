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

#include <string>
#include <utility>
#include <vector>

#include "qrac/sampling.hpp"

namespace qrac {

/// Best encodings for fixed measurements: for every bit string x, the
/// score operator S_x = sum_i D_i^{x_i} is linear in the encoding state,
/// so the maximizer is the projector onto its leading eigenvector.
/// Degenerate leading eigenspaces resolve to the deterministic canonical
/// representative of the eigensolver.
namespace detail {

inline void check_code_shape(int n, int m, const char* where) {
  if (n < 1 || n > 16)
    throw ValidationError(std::string(where) + ": n must be in [1, 16], got " +
                          std::to_string(n));
  if (m < 1 || m > 4)
    throw ValidationError(std::string(where) + ": m must be in [1, 4], got " + std::to_string(m));
}

}  // namespace detail

inline std::vector<BlochVector> optimal_encodings_given_measurements(
    const std::vector<BinaryPovmBloch>& measurements, int n, int m) {
  detail::check_code_shape(n, m, "optimal_encodings_given_measurements");
  if (static_cast<int>(measurements.size()) != n)
    throw ValidationError("optimal_encodings_given_measurements: expected " + std::to_string(n) +
                          " measurements, got " + std::to_string(measurements.size()));
  std::vector<std::pair<HermitianMatrix, HermitianMatrix>> povm;
  povm.reserve(n);
  for (const BinaryPovmBloch& p : measurements) {
    if (p.m != m)
      throw ValidationError("optimal_encodings_given_measurements: measurement qubit count " +
                            std::to_string(p.m) + " does not match m=" + std::to_string(m));
    povm.push_back(povm_matrices(p));
  }
  const int dim = 1 << m;
  const int count = 1 << n;
  std::vector<BlochVector> encodings;
  encodings.reserve(count);
  for (int x = 0; x < count; ++x) {
    HermitianMatrix score(dim);
    for (int i = 0; i < n; ++i)
      score += bit_of(x, i, n) == 0 ? povm[i].first : povm[i].second;
    encodings.push_back(density_to_bloch(eigenspace_projector(score, EigenSelector::Top)));
  }
  return encodings;
}

/// Best measurements for fixed encodings (Helstrom step): bit i is decoded
/// optimally by projecting onto the nonnegative eigenspace of
/// M_i = sum_{x: x_i=0} rho_x - sum_{x: x_i=1} rho_x. An all-zero M_i
/// yields D^0 = I (zero eigenvalues count as nonnegative).
inline std::vector<BinaryPovmBloch> optimal_measurements_given_encodings(
    const std::vector<BlochVector>& encodings, int n, int m) {
  detail::check_code_shape(n, m, "optimal_measurements_given_encodings");
  const int count = 1 << n;
  const int dim = 1 << m;
  if (static_cast<int>(encodings.size()) != count)
    throw ValidationError("optimal_measurements_given_encodings: expected " +
                          std::to_string(count) + " encodings, got " +
                          std::to_string(encodings.size()));
  std::vector<HermitianMatrix> rho;
  rho.reserve(count);
  for (int x = 0; x < count; ++x) {
    if (encodings[x].dim() != dim)
      throw ValidationError("optimal_measurements_given_encodings: encoding dimension mismatch");
    HermitianMatrix r = bloch_to_density(encodings[x]);
    if (min_eigenvalue(r) < -PSD_TOL)
      throw ValidationError("optimal_measurements_given_encodings: encoding for x=" +
                            index_to_bits(x, n) + " is not a valid Bloch vector");
    rho.push_back(std::move(r));
  }
  std::vector<BinaryPovmBloch> measurements;
  measurements.reserve(n);
  for (int i = 0; i < n; ++i) {
    HermitianMatrix diff(dim);
    for (int x = 0; x < count; ++x)
      diff.add_scaled(rho[x], bit_of(x, i, n) == 0 ? 1.0 : -1.0);
    measurements.push_back(
        povm_from_element(m, eigenspace_projector(diff, EigenSelector::NonNegative)));
  }
  return measurements;
}

struct SeesawConfig {
  int n = 2;
  int m = 1;
  int restarts = 10;
  int max_iters = 500;
  double conv_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct SeesawTrace {
  double p = 0.0;                    // best average success found
  int winner_restart = 0;            // lowest index among ties
  std::vector<double> p_history;     // winner's per-iteration values
  QracStrategy strategy;             // winner's final strategy
  std::vector<std::vector<double>> all_histories;  // one per restart
};

/// Alternating optimization from random pure-state encodings. Restart k
/// runs on its own SplitMix64 stream seeded with seed XOR k; iterations
/// apply the measurement step then the encoding step and stop when the
/// per-iteration gain drops below conv_tol. The product
/// restarts * max_iters is capped at 10^6 to keep runs desk-scale.
inline SeesawTrace seesaw(const SeesawConfig& cfg) {
  detail::check_code_shape(cfg.n, cfg.m, "seesaw");
  if (cfg.restarts < 1 || cfg.max_iters < 1)
    throw ValidationError("seesaw: restarts and max_iters must be >= 1");
  if (static_cast<long long>(cfg.restarts) * cfg.max_iters > 1000000LL)
    throw ValidationError("seesaw: restarts * max_iters exceeds the 10^6 cap");
  if (!(cfg.conv_tol > 0.0))
    throw ValidationError("seesaw: conv_tol must be positive");

  const int count = 1 << cfg.n;
  const int dim = 1 << cfg.m;
  SeesawTrace best;
  best.p = -1.0;
  for (int k = 0; k < cfg.restarts; ++k) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(k));
    QracStrategy s;
    s.n = cfg.n;
    s.m = cfg.m;
    s.encodings.reserve(count);
    for (int x = 0; x < count; ++x) s.encodings.push_back(random_pure_bloch(dim, rng));

    std::vector<double> history;
    double prev = -1.0;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      s.measurements = optimal_measurements_given_encodings(s.encodings, cfg.n, cfg.m);
      s.encodings = optimal_encodings_given_measurements(s.measurements, cfg.n, cfg.m);
      const double p = avg_success(s);
      history.push_back(p);
      if (prev >= 0.0 && std::abs(p - prev) < cfg.conv_tol) break;
      prev = p;
    }
    const double p_final = history.back();
    if (p_final > best.p) {
      best.p = p_final;
      best.winner_restart = k;
      best.p_history = history;
      best.strategy = s;
    }
    best.all_histories.push_back(std::move(history));
  }
  return best;
}

namespace detail {

inline HermitianMatrix pauli_x() { return HermitianMatrix::from_entries(2, {0, 1, 1, 0}); }
inline HermitianMatrix pauli_y() {
  return HermitianMatrix::from_entries(2, {0, cplx(0, -1), cplx(0, 1), 0});
}
inline HermitianMatrix pauli_z() { return HermitianMatrix::from_entries(2, {1, 0, 0, -1}); }

inline HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  HermitianMatrix out(na * nb);
  for (int ja = 0; ja < na; ++ja)
    for (int ka = 0; ka < na; ++ka)
      for (int jb = 0; jb < nb; ++jb)
        for (int kb = 0; kb < nb; ++kb)
          out.set(ja * nb + jb, ka * nb + kb, a(ja, ka) * b(jb, kb));
  return out;
}

// Pairwise anticommuting observables squaring to the identity: 2m+1 of
// them exist on m qubits.
inline std::vector<HermitianMatrix> anticommuting_observables(int m) {
  if (m == 1) return {pauli_z(), pauli_x(), pauli_y()};
  const HermitianMatrix id2 = HermitianMatrix::identity(2);
  return {kron(pauli_x(), id2), kron(pauli_y(), id2), kron(pauli_z(), pauli_x()),
          kron(pauli_z(), pauli_y()), kron(pauli_z(), pauli_z())};
}

}  // namespace detail

/// Closed-form strategies:
///   (2,2)            perfect code: computational-basis encodings, one
///                    qubit read out per bit (success probability 1);
///   m <= 2, n <= 2m+1  anticommuting-observable family with
///                    rho_x = (I + n^{-1/2} sum_i (-1)^{x_i} G_i)/2^m and
///                    G_i measured directly; success 1/2 + 1/(2 sqrt(n)).
/// For m = 1, n in {2, 3} the family is the optimal square/cube
/// construction and meets the bound. Everything else reports an
/// unsupported combination and points at the see-saw optimizer.
inline QracStrategy construct_known(int n, int m) {
  if (n == 2 && m == 2) {
    QracStrategy s;
    s.n = 2;
    s.m = 2;
    for (int x = 0; x < 4; ++x) {
      HermitianMatrix rho(4);
      rho.set(x, x, 1.0);
      s.encodings.push_back(density_to_bloch(rho));
    }
    HermitianMatrix first_qubit(4), second_qubit(4);
    first_qubit.set(0, 0, 1.0);
    first_qubit.set(1, 1, 1.0);
    second_qubit.set(0, 0, 1.0);
    second_qubit.set(2, 2, 1.0);
    s.measurements.push_back(povm_from_element(2, first_qubit));
    s.measurements.push_back(povm_from_element(2, second_qubit));
    return s;
  }
  if (m >= 1 && m <= 2 && n >= 1 && n <= 2 * m + 1) {
    const int dim = 1 << m;
    const std::vector<HermitianMatrix> obs = detail::anticommuting_observables(m);
    QracStrategy s;
    s.n = n;
    s.m = m;
    const double scale = 1.0 / (std::sqrt(static_cast<double>(n)) * dim);
    for (int x = 0; x < (1 << n); ++x) {
      HermitianMatrix rho = HermitianMatrix::identity(dim);
      rho *= 1.0 / dim;
      for (int i = 0; i < n; ++i)
        rho.add_scaled(obs[i], bit_of(x, i, n) == 0 ? scale : -scale);
      s.encodings.push_back(density_to_bloch(rho));
    }
    for (int i = 0; i < n; ++i) {
      HermitianMatrix d0 = HermitianMatrix::identity(dim);
      d0 += obs[i];
      d0 *= 0.5;
      s.measurements.push_back(povm_from_element(m, d0));
    }
    return s;
  }
  throw ValidationError("construct_known: no closed-form construction for (n,m)=(" +
                        std::to_string(n) + "," + std::to_string(m) +
                        "); run the see-saw optimizer instead");
}

}  // namespace qrac
