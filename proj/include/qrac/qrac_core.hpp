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
#include <vector>

#include "qrac/bloch_geometry.hpp"
#include "qrac/detail/neumaier.hpp"
#include "qrac/rng.hpp"

namespace qrac {

// Bit-string convention: the string x1 x2 ... xn is read left to right,
// so "011" means x1=0, x2=1, x3=1 and maps to index 0b011 = 3 with x1 as
// the most significant bit.

/// Bit x_{i+1} of the index x (i is 0-based).
inline int bit_of(int x, int i, int n) { return (x >> (n - 1 - i)) & 1; }

/// Index of the bitwise complement of x.
inline int complement_index(int x, int n) { return x ^ ((1 << n) - 1); }

inline std::string index_to_bits(int x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (bit_of(x, i, n)) s[i] = '1';
  return s;
}

inline int bits_to_index(const std::string& s) {
  int x = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw ValidationError("bit string contains a character other than 0/1: \"" + s + "\"");
    x = (x << 1) | (c == '1');
  }
  return x;
}

/// Two-outcome POVM on m qubits in generator coordinates:
///   D^0 = alpha0 I + sum_i alpha_i s_i,   D^1 = I - D^0.
/// Construction enforces the necessary coordinate bounds (alpha0 in
/// [0,1], the alpha0-dependent norm cap and the absolute norm cap); the
/// sufficient positivity check happens when matrices are materialized.
struct BinaryPovmBloch {
  int m;
  double alpha0;
  BlochVector alpha;

  BinaryPovmBloch(int m_, double alpha0_, BlochVector alpha_)
      : m(m_), alpha0(alpha0_), alpha(std::move(alpha_)) {
    if (m < 1 || m > 4)
      throw ValidationError("BinaryPovmBloch: qubit count must be in [1, 4], got " +
                            std::to_string(m));
    const int dim = 1 << m;
    if (alpha.dim() != dim)
      throw ValidationError("BinaryPovmBloch: alpha has dimension " +
                            std::to_string(alpha.dim()) + ", expected " + std::to_string(dim));
    if (!(alpha0 >= 0.0 && alpha0 <= 1.0))
      throw ValidationError("BinaryPovmBloch: alpha0 must lie in [0, 1], got " +
                            std::to_string(alpha0));
    const double rR = 2.0 / dim;
    if (alpha.norm() > 0.5 / std::sqrt(rR) + 1e-9)
      throw ValidationError("BinaryPovmBloch: |alpha| exceeds the POVM norm cap 1/(2 sqrt(rR))");
    if (inner(alpha, alpha) > alpha0 * (1.0 - alpha0) / rR + 1e-9)
      throw ValidationError(
          "BinaryPovmBloch: |alpha|^2 exceeds the alpha0-dependent cap alpha0(1-alpha0)/(rR)");
  }
};

/// Materializes (D^0, D^1). D^1 is computed as I - D^0 entry by entry, so
/// the completeness relation holds exactly. Throws if either element
/// fails the positivity check -- the coordinate bounds are necessary but
/// not sufficient.
inline std::pair<HermitianMatrix, HermitianMatrix> povm_matrices(const BinaryPovmBloch& p) {
  const int dim = 1 << p.m;
  const GeneratorSet& gen = gellmann_generators(dim);
  HermitianMatrix d0 = HermitianMatrix::identity(dim);
  d0 *= p.alpha0;
  for (int i = 0; i < p.alpha.size(); ++i)
    if (p.alpha[i] != 0.0) d0.add_scaled(gen[i], p.alpha[i]);
  HermitianMatrix d1 = HermitianMatrix::identity(dim);
  d1 -= d0;
  const double lo0 = min_eigenvalue(d0);
  if (lo0 < -PSD_TOL)
    throw ValidationError("povm_matrices: D0 is not positive semidefinite (min eigenvalue " +
                          std::to_string(lo0) + ")");
  const double lo1 = min_eigenvalue(d1);
  if (lo1 < -PSD_TOL)
    throw ValidationError("povm_matrices: D1 is not positive semidefinite (min eigenvalue " +
                          std::to_string(lo1) + ")");
  return {std::move(d0), std::move(d1)};
}

/// Inverse expansion: reads (alpha0, alpha) off a candidate D^0 via
/// alpha0 = Tr[D]/2^m and alpha_i = Tr[D s_i]/2.
inline BinaryPovmBloch povm_from_element(int m, const HermitianMatrix& d0) {
  const int dim = 1 << m;
  if (d0.dim() != dim)
    throw ValidationError("povm_from_element: element has dimension " +
                          std::to_string(d0.dim()) + ", expected " + std::to_string(dim));
  const GeneratorSet& gen = gellmann_generators(dim);
  std::vector<double> coords(static_cast<std::size_t>(dim) * dim - 1);
  for (int i = 0; i < gen.count(); ++i) coords[i] = 0.5 * trace_product(d0, gen[i]);
  return BinaryPovmBloch(m, d0.trace() / dim, BlochVector(dim, std::move(coords)));
}

/// Factorization D^0 = scale0 rho(z1), D^1 = scale1 rho(z2) with
/// z1 = (rR/alpha0) alpha and z2 = -(alpha0/(1-alpha0)) z1. Positivity of
/// the POVM is equivalent to both z's being valid Bloch vectors.
struct PovmFactorization {
  BlochVector z1;
  BlochVector z2;
  double scale0;
  double scale1;
};

inline PovmFactorization povm_factorize(const BinaryPovmBloch& p) {
  if (p.alpha0 <= 0.0 || p.alpha0 >= 1.0)
    throw DegenerateError(
        "povm_factorize: alpha0 on the boundary of [0,1] makes one element zero");
  const int dim = 1 << p.m;
  const double rR = 2.0 / dim;
  BlochVector z1 = p.alpha * (rR / p.alpha0);
  BlochVector z2 = z1 * (-p.alpha0 / (1.0 - p.alpha0));
  return PovmFactorization{std::move(z1), std::move(z2), dim * p.alpha0, dim * (1.0 - p.alpha0)};
}

/// A POVM saturating the norm cap with alpha0 = 1/2 is projective: both
/// elements are orthogonal projectors of rank 2^{m-1}.
inline bool is_projective(const BinaryPovmBloch& p) {
  const double rR = 2.0 / (1 << p.m);
  return std::abs(p.alpha0 - 0.5) <= 1e-9 &&
         std::abs(p.alpha.norm() - 0.5 / std::sqrt(rR)) <= 1e-9;
}

/// Full protocol for n bits in m qubits: one encoding per bit string and
/// one two-outcome measurement per bit position.
struct QracStrategy {
  int n;
  int m;
  std::vector<BlochVector> encodings;        // 2^n entries, indexed by bit string
  std::vector<BinaryPovmBloch> measurements; // n entries, entry i decodes bit i+1
};

/// Success-probability cap 1/2 + (1/2) sqrt(2^{m-1}/n), equivalently
/// 1/2 + (1/2) sqrt(1/(n r R)) through the dual radii. Values >= 1 are
/// legal (the inequality is vacuous there) and only flagged.
struct UpperBound {
  double value;
  bool vacuous;
};

inline UpperBound upper_bound(int n, int m) {
  if (n < 1) throw ValidationError("upper_bound: n must be >= 1, got " + std::to_string(n));
  if (m < 1 || m > 4)
    throw ValidationError("upper_bound: m must be in [1, 4], got " + std::to_string(m));
  const double via_power = 0.5 + 0.5 * std::sqrt(std::ldexp(1.0, m - 1) / n);
  const double rR = std::ldexp(1.0, 1 - m);  // 2/2^m, exact
  const double via_radii = 0.5 + 0.5 * std::sqrt(1.0 / (n * rR));
  if (std::abs(via_power - via_radii) > 1e-15)
    throw NumericError("upper_bound: the two closed forms disagree");
  return UpperBound{via_power, via_power >= 1.0};
}

namespace detail {

// Materialized strategy: densities, POVM pairs and the success table
// computed along both evaluation routes. Building this performs full
// validation (encoding membership, POVM positivity).
struct StrategyTables {
  std::vector<HermitianMatrix> rho;                       // [x]
  std::vector<std::pair<HermitianMatrix, HermitianMatrix>> povm;  // [i]
  std::vector<std::vector<double>> success_matrix;        // [x][i], trace route
  std::vector<std::vector<double>> success_bloch;         // [x][i], coordinate route
  std::vector<std::vector<double>> outcome0_prob;         // [x][i], Tr[D_i^0 rho_x]
};

inline StrategyTables build_tables(const QracStrategy& s) {
  if (s.n < 1 || s.n > 16)
    throw ValidationError("QracStrategy: n must be in [1, 16], got " + std::to_string(s.n));
  if (s.m < 1 || s.m > 4)
    throw ValidationError("QracStrategy: m must be in [1, 4], got " + std::to_string(s.m));
  const int count = 1 << s.n;
  const int dim = 1 << s.m;
  if (static_cast<int>(s.encodings.size()) != count)
    throw ValidationError("QracStrategy: expected " + std::to_string(count) +
                          " encodings, got " + std::to_string(s.encodings.size()));
  if (static_cast<int>(s.measurements.size()) != s.n)
    throw ValidationError("QracStrategy: expected " + std::to_string(s.n) +
                          " measurements, got " + std::to_string(s.measurements.size()));

  StrategyTables t;
  t.rho.reserve(count);
  for (int x = 0; x < count; ++x) {
    const BlochVector& beta = s.encodings[x];
    if (beta.dim() != dim)
      throw ValidationError("QracStrategy: encoding for x=" + index_to_bits(x, s.n) +
                            " has dimension " + std::to_string(beta.dim()) + ", expected " +
                            std::to_string(dim));
    HermitianMatrix rho = bloch_to_density(beta);
    const double lo = min_eigenvalue(rho);
    if (lo < -PSD_TOL)
      throw ValidationError("QracStrategy: encoding for x=" + index_to_bits(x, s.n) +
                            " is not a valid Bloch vector (min eigenvalue " +
                            std::to_string(lo) + ")");
    t.rho.push_back(std::move(rho));
  }
  t.povm.reserve(s.n);
  for (int i = 0; i < s.n; ++i) {
    const BinaryPovmBloch& p = s.measurements[i];
    if (p.m != s.m)
      throw ValidationError("QracStrategy: measurement " + std::to_string(i + 1) +
                            " acts on " + std::to_string(p.m) + " qubits, expected " +
                            std::to_string(s.m));
    try {
      t.povm.push_back(povm_matrices(p));
    } catch (const ValidationError& e) {
      throw ValidationError("QracStrategy: measurement " + std::to_string(i + 1) + ": " +
                            e.what());
    }
  }

  t.success_matrix.assign(count, std::vector<double>(s.n));
  t.success_bloch.assign(count, std::vector<double>(s.n));
  t.outcome0_prob.assign(count, std::vector<double>(s.n));
  for (int x = 0; x < count; ++x) {
    for (int i = 0; i < s.n; ++i) {
      const int xi = bit_of(x, i, s.n);
      const auto& [d0, d1] = t.povm[i];
      const double p0 = trace_product(d0, t.rho[x]);
      t.outcome0_prob[x][i] = p0;
      t.success_matrix[x][i] = trace_product(xi == 0 ? d0 : d1, t.rho[x]);
      const BinaryPovmBloch& p = s.measurements[i];
      t.success_bloch[x][i] =
          xi + (xi == 0 ? 1.0 : -1.0) * (p.alpha0 + inner(p.alpha, s.encodings[x]));
    }
  }
  return t;
}

inline double mean_over_pairs(const std::vector<std::vector<double>>& table) {
  NeumaierSum acc;
  std::size_t count = 0;
  for (const auto& row : table)
    for (double v : row) {
      acc.add(v);
      ++count;
    }
  return acc.value() / static_cast<double>(count);
}

}  // namespace detail

/// Throws ValidationError (with the violated invariant named) unless s is
/// a complete, in-range, positive strategy.
inline void validate_strategy(const QracStrategy& s) { detail::build_tables(s); }

/// Average success probability over uniform (x, i). Evaluated through the
/// trace route and the coordinate route; the two must agree to 1e-12.
inline double avg_success(const QracStrategy& s) {
  const detail::StrategyTables t = detail::build_tables(s);
  const double via_matrix = detail::mean_over_pairs(t.success_matrix);
  const double via_bloch = detail::mean_over_pairs(t.success_bloch);
  if (std::abs(via_matrix - via_bloch) > 1e-12)
    throw NumericError("avg_success: trace and coordinate routes disagree: " +
                       std::to_string(via_matrix) + " vs " + std::to_string(via_bloch));
  return via_matrix;
}

/// Success table plus the telescoping estimate behind the bound:
///   S1 = sum_x <T_x, beta_x - beta_xbar>/2      (exact rewrite of p - 1/2)
///   S2 = sum_x |T_x| |beta_x - beta_xbar|/2     (Cauchy-Schwarz)
///   S3 = sum_x |T_x|                            (pair distance <= 1)
///   S4 = 2^n sqrt(sum_i |alpha_i|^2)            (signed-sum inequality)
///   S5 = 2^n sqrt(n/(4 r R))                    (POVM norm cap)
/// with p_avg = 1/2 + S1/(n 2^n) and bound = 1/2 + S5/(n 2^n).
struct EvaluationReport {
  int n = 0;
  int m = 0;
  double p_avg = 0.0;
  double p_worst = 0.0;
  std::vector<std::vector<double>> per_pair;  // [x][i] success probabilities
  double bound = 0.0;
  bool bound_vacuous = false;
  std::vector<double> t_norms;  // |T_x| per bit string
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0, s5 = 0.0;
};

inline EvaluationReport avg_success_decomposed(const QracStrategy& s) {
  const detail::StrategyTables t = detail::build_tables(s);
  const int count = 1 << s.n;
  const double pairs = static_cast<double>(s.n) * count;

  EvaluationReport rep;
  rep.n = s.n;
  rep.m = s.m;
  rep.per_pair = t.success_matrix;
  rep.p_avg = detail::mean_over_pairs(t.success_matrix);
  const double via_bloch = detail::mean_over_pairs(t.success_bloch);
  if (std::abs(rep.p_avg - via_bloch) > 1e-12)
    throw NumericError("avg_success_decomposed: trace and coordinate routes disagree");

  rep.p_worst = rep.per_pair[0][0];
  for (const auto& row : rep.per_pair)
    for (double v : row) rep.p_worst = std::min(rep.p_worst, v);

  detail::NeumaierSum s1, s2, s3;
  rep.t_norms.resize(count);
  for (int x = 0; x < count; ++x) {
    BlochVector tx = BlochVector::zero(1 << s.m);
    for (int i = 0; i < s.n; ++i)
      tx += s.measurements[i].alpha * (bit_of(x, i, s.n) == 0 ? 1.0 : -1.0);
    const BlochVector delta = s.encodings[x] - s.encodings[complement_index(x, s.n)];
    const double tn = tx.norm();
    rep.t_norms[x] = tn;
    s1.add(0.5 * inner(tx, delta));
    s2.add(0.5 * tn * delta.norm());
    s3.add(tn);
  }
  rep.s1 = s1.value();
  rep.s2 = s2.value();
  rep.s3 = s3.value();
  detail::NeumaierSum alpha2;
  for (const BinaryPovmBloch& p : s.measurements) alpha2.add(inner(p.alpha, p.alpha));
  rep.s4 = count * std::sqrt(alpha2.value());
  const double rR = std::ldexp(1.0, 1 - s.m);
  rep.s5 = count * std::sqrt(s.n / (4.0 * rR));

  const double p_from_chain = 0.5 + rep.s1 / pairs;
  if (std::abs(p_from_chain - rep.p_avg) > 1e-12)
    throw NumericError("avg_success_decomposed: signed-sum rewrite disagrees with p_avg");
  const double slack = 1e-12;
  if (rep.s1 > rep.s2 + slack || rep.s2 > rep.s3 + slack || rep.s3 > rep.s4 + slack ||
      rep.s4 > rep.s5 + slack)
    throw NumericError("avg_success_decomposed: estimate chain violated");

  const UpperBound b = upper_bound(s.n, s.m);
  rep.bound = b.value;
  rep.bound_vacuous = b.vacuous;
  if (rep.p_worst > rep.p_avg + 1e-12 || rep.p_avg > rep.bound + 1e-9)
    throw NumericError("avg_success_decomposed: report invariant violated");
  return rep;
}

/// Smallest per-(x, i) success probability.
inline double worst_case_success(const QracStrategy& s) {
  const detail::StrategyTables t = detail::build_tables(s);
  double lo = t.success_matrix[0][0];
  for (const auto& row : t.success_matrix)
    for (double v : row) lo = std::min(lo, v);
  return lo;
}

/// Worst-case success of the protocol derandomized with a uniform shared
/// XOR mask: per requested bit, masking averages the success over all bit
/// strings, so the guarantee is the smallest per-bit column mean.
inline double xor_randomized_worst_case(const QracStrategy& s) {
  const detail::StrategyTables t = detail::build_tables(s);
  const int count = 1 << s.n;
  double lo = 1.0;
  for (int i = 0; i < s.n; ++i) {
    detail::NeumaierSum acc;
    for (int x = 0; x < count; ++x) acc.add(t.success_matrix[x][i]);
    lo = std::min(lo, acc.value() / count);
  }
  return lo;
}

/// Monte-Carlo estimate of avg_success: each trial draws (x, i) uniformly,
/// samples the measurement outcome from Tr[D_i^0 rho_x], and scores a hit
/// when the outcome equals x_i. Fixed seed gives a fixed result.
inline double simulate(const QracStrategy& s, long long trials, std::uint64_t seed) {
  if (trials < 1)
    throw ValidationError("simulate: trials must be >= 1, got " + std::to_string(trials));
  const detail::StrategyTables t = detail::build_tables(s);
  SplitMix64 rng(seed);
  const int count = 1 << s.n;
  long long hits = 0;
  for (long long k = 0; k < trials; ++k) {
    const int x = static_cast<int>(rng.next_below(count));
    const int i = static_cast<int>(rng.next_below(s.n));
    const int outcome = rng.next_double() < t.outcome0_prob[x][i] ? 0 : 1;
    hits += (outcome == bit_of(x, i, s.n));
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace qrac
