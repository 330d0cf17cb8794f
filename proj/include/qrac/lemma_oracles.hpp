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

// Randomized verification campaigns: each one samples the objects a
// geometric or measurement-theoretic statement quantifies over and
// records the worst violation observed. A campaign is pure in
// (dim, samples, seed).

/// Signed-sum inequality over all 2^n sign patterns:
///   lhs = sum_x |sum_i (-1)^{x_i} mu_i|,  rhs = 2^n sqrt(sum_i |mu_i|^2),
/// lhs <= rhs with equality exactly for pairwise-orthogonal mu's.
struct MancinskaCheck {
  double lhs;
  double rhs;
  bool equality;  // |lhs - rhs| < 1e-9
};

inline MancinskaCheck mancinska_check(const std::vector<std::vector<double>>& mus) {
  const int n = static_cast<int>(mus.size());
  if (n < 1 || n > 12)
    throw ValidationError("mancinska_check: vector count must be in [1, 12], got " +
                          std::to_string(n));
  const std::size_t d = mus[0].size();
  for (const auto& mu : mus)
    if (mu.size() != d)
      throw ValidationError("mancinska_check: vectors must share one dimension");
  detail::NeumaierSum lhs;
  std::vector<double> signed_sum(d);
  for (int x = 0; x < (1 << n); ++x) {
    std::fill(signed_sum.begin(), signed_sum.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double sign = bit_of(x, i, n) == 0 ? 1.0 : -1.0;
      for (std::size_t j = 0; j < d; ++j) signed_sum[j] += sign * mus[i][j];
    }
    double norm2 = 0.0;
    for (double v : signed_sum) norm2 += v * v;
    lhs.add(std::sqrt(norm2));
  }
  detail::NeumaierSum total2;
  for (const auto& mu : mus) {
    double norm2 = 0.0;
    for (double v : mu) norm2 += v * v;
    total2.add(norm2);
  }
  const double l = lhs.value();
  const double r = (1 << n) * std::sqrt(total2.value());
  return MancinskaCheck{l, r, std::abs(l - r) < 1e-9};
}

/// Exact identity behind the inequality:
///   sum_x |sum_i (-1)^{x_i} mu_i|^2 = 2^n sum_i |mu_i|^2  for all inputs.
struct ParsevalCheck {
  double lhs;
  double rhs;
};

inline ParsevalCheck parseval_sign_identity(const std::vector<std::vector<double>>& mus) {
  const int n = static_cast<int>(mus.size());
  if (n < 1 || n > 12)
    throw ValidationError("parseval_sign_identity: vector count must be in [1, 12], got " +
                          std::to_string(n));
  const std::size_t d = mus[0].size();
  for (const auto& mu : mus)
    if (mu.size() != d)
      throw ValidationError("parseval_sign_identity: vectors must share one dimension");
  detail::NeumaierSum lhs;
  std::vector<double> signed_sum(d);
  for (int x = 0; x < (1 << n); ++x) {
    std::fill(signed_sum.begin(), signed_sum.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double sign = bit_of(x, i, n) == 0 ? 1.0 : -1.0;
      for (std::size_t j = 0; j < d; ++j) signed_sum[j] += sign * mus[i][j];
    }
    double norm2 = 0.0;
    for (double v : signed_sum) norm2 += v * v;
    lhs.add(norm2);
  }
  detail::NeumaierSum total2;
  for (const auto& mu : mus) {
    double norm2 = 0.0;
    for (double v : mu) norm2 += v * v;
    total2.add(norm2);
  }
  return ParsevalCheck{lhs.value(), (1 << n) * total2.value()};
}

struct CampaignReport {
  std::string name;
  int dim = 0;  // Hilbert dimension, or max vector count for the two vector campaigns
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_violation = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> components;  // per-check worst violation
};

namespace detail {

class ViolationTracker {
 public:
  void record(const std::string& label, double violation) {
    for (auto& [name, value] : components_)
      if (name == label) {
        value = std::max(value, violation);
        worst_ = std::max(worst_, violation);
        return;
      }
    components_.emplace_back(label, violation);
    worst_ = std::max(worst_, violation);
  }

  double worst() const { return worst_; }
  const std::vector<std::pair<std::string, double>>& components() const { return components_; }

 private:
  double worst_ = 0.0;
  std::vector<std::pair<std::string, double>> components_;
};

inline int qubits_for_dim(int dim, const std::string& campaign) {
  for (int m = 1; m <= 4; ++m)
    if ((1 << m) == dim) return m;
  throw ValidationError(campaign + " campaign requires a power-of-two dimension, got " +
                        std::to_string(dim));
}

// Gram-Schmidt orthonormal set of k Gaussian vectors in R^d, each then
// rescaled by a uniform factor in [0.5, 2].
inline std::vector<std::vector<double>> random_orthogonal_set(int k, int d, SplitMix64& rng) {
  std::vector<std::vector<double>> set;
  set.reserve(k);
  while (static_cast<int>(set.size()) < k) {
    std::vector<double> v(d);
    for (double& x : v) x = rng.next_gaussian();
    for (const auto& u : set) {
      double proj = 0.0;
      double unorm2 = 0.0;
      for (int j = 0; j < d; ++j) {
        proj += u[j] * v[j];
        unorm2 += u[j] * u[j];
      }
      for (int j = 0; j < d; ++j) v[j] -= (proj / unorm2) * u[j];
    }
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    if (norm2 < 1e-12) continue;
    const double scale = (0.5 + 1.5 * rng.next_double()) / std::sqrt(norm2);
    for (double& x : v) x *= scale;
    set.push_back(std::move(v));
  }
  return set;
}

}  // namespace detail

/// One campaign per verified statement. The two vector campaigns
/// (mancinska, parseval) interpret `dim` as the maximum vector count; the
/// rest interpret it as the Hilbert-space dimension N.
enum class Campaign {
  Hyperplane,
  Uppercomp,
  Obs1,
  Obs3,
  PovmBound,
  Mancinska,
  Parseval,
  Midpoint,
};

inline const std::vector<std::pair<std::string, Campaign>>& campaign_names() {
  static const std::vector<std::pair<std::string, Campaign>> table = {
      {"hyperplane", Campaign::Hyperplane}, {"uppercomp", Campaign::Uppercomp},
      {"obs1", Campaign::Obs1},             {"obs3", Campaign::Obs3},
      {"povm_bound", Campaign::PovmBound},  {"mancinska", Campaign::Mancinska},
      {"parseval", Campaign::Parseval},     {"midpoint", Campaign::Midpoint},
  };
  return table;
}

inline Campaign campaign_from_name(const std::string& name) {
  for (const auto& [label, c] : campaign_names())
    if (label == name) return c;
  throw ValidationError("unknown campaign \"" + name +
                        "\"; expected one of hyperplane, uppercomp, obs1, obs3, povm_bound, "
                        "mancinska, parseval, midpoint");
}

inline std::string campaign_name(Campaign c) {
  for (const auto& [label, value] : campaign_names())
    if (value == c) return label;
  return "?";
}

inline CampaignReport run_campaign(Campaign which, int dim, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("run_campaign: samples must be >= 1");
  const bool vector_campaign = which == Campaign::Mancinska || which == Campaign::Parseval;
  if (dim == 0) dim = vector_campaign ? 10 : 3;  // defaults
  if (vector_campaign) {
    if (dim < 1 || dim > 12)
      throw ValidationError("run_campaign: vector count must be in [1, 12]");
  } else if (dim < 2 || dim > 16) {
    throw ValidationError("run_campaign: dimension must be in [2, 16]");
  }

  CampaignReport rep;
  rep.name = campaign_name(which);
  rep.dim = dim;
  rep.samples = samples;
  rep.seed = seed;
  SplitMix64 rng(seed);
  detail::ViolationTracker tracker;

  switch (which) {
    case Campaign::Hyperplane: {
      rep.tolerance = 1e-12;
      for (int s = 0; s < samples; ++s) {
        // Direct inclusion: valid pairs satisfy <b1, b2> >= -2/N.
        const BlochVector b1 = random_density_bloch(dim, rng);
        const BlochVector b2 = random_density_bloch(dim, rng);
        tracker.record("pair_inner_bound", std::max(0.0, -2.0 / dim - inner(b1, b2)));
        // Converse: an invalid point is cut off by the half-space of the
        // eigenvector with the most negative eigenvalue. Vacuous at N=2,
        // where the Bloch body fills the outsphere ball.
        if (dim >= 3) {
          const BlochVector z = random_invalid_point(dim, rng);
          const EigenDecomposition d = eigh(bloch_to_density(z));
          const BlochVector witness =
              density_to_bloch(projector_from_state(d.column(dim - 1)));
          tracker.record("invalid_point_separated",
                         std::max(0.0, inner(z, witness) + 2.0 / dim));
        }
      }
      break;
    }
    case Campaign::Uppercomp: {
      rep.tolerance = 1e-9;
      for (int s = 0; s < samples; ++s) {
        const BlochVector b1 = random_density_bloch(dim, rng);
        const BlochVector b2 = random_density_bloch(dim, rng);
        tracker.record("half_distance_cap", std::max(0.0, pair_distance(b1, b2) - 1.0));
      }
      break;
    }
    case Campaign::Obs1: {
      rep.tolerance = 1e-9;
      for (int s = 0; s < samples; ++s) {
        BlochVector beta = random_density_bloch(dim, rng);
        while (beta.norm() < 1e-6) beta = random_density_bloch(dim, rng);
        const BoundaryScaling bs = boundary_scaling(beta);
        tracker.record("opposite_on_boundary",
                       std::abs(min_eigenvalue(bloch_to_density(bs.opposite))));
        tracker.record("outward_on_boundary",
                       std::abs(min_eigenvalue(bloch_to_density(bs.outward))));
      }
      break;
    }
    case Campaign::Obs3: {
      rep.tolerance = 1e-9;
      const int m = detail::qubits_for_dim(dim, "obs3");
      const double rR = 2.0 / dim;
      for (int s = 0; s < samples; ++s) {
        // Random projective POVM: the top half-rank eigenprojector of a
        // Gaussian Hermitian matrix.
        const EigenDecomposition d = eigh(random_hermitian(dim, rng));
        HermitianMatrix proj(dim);
        for (int j = 0; j < dim; ++j)
          for (int k = j; k < dim; ++k) {
            cplx acc = 0.0;
            for (int e = 0; e < dim / 2; ++e)
              acc += d.vector_entry(j, e) * std::conj(d.vector_entry(k, e));
            proj.set(j, k, acc);
          }
        const BinaryPovmBloch p = povm_from_element(m, proj);
        tracker.record("saturates_norm_cap", is_projective(p) ? 0.0 : 1.0);
        const auto [d0, d1] = povm_matrices(p);
        HermitianMatrix completeness = d0 + d1;
        completeness -= HermitianMatrix::identity(dim);
        tracker.record("completeness", max_abs_diff(completeness, HermitianMatrix(dim)));
        tracker.record("element_orthogonality", std::abs(trace_product(d0, d1)));
        tracker.record("idempotence",
                       std::max(max_abs_diff(hermitian_square(d0), d0),
                                max_abs_diff(hermitian_square(d1), d1)));
        const BlochVector unit = p.alpha * (1.0 / p.alpha.norm());
        const BlochVector plus = unit * std::sqrt(rR);
        tracker.record("bloch_points_on_boundary",
                       std::max(std::abs(min_eigenvalue(bloch_to_density(plus))),
                                std::abs(min_eigenvalue(bloch_to_density(plus * -1.0)))));
        HermitianMatrix sum = bloch_to_density(plus) + bloch_to_density(plus * -1.0);
        HermitianMatrix target = HermitianMatrix::identity(dim);
        target *= rR;
        tracker.record("sum_is_rR_identity", max_abs_diff(sum, target));
      }
      break;
    }
    case Campaign::PovmBound: {
      rep.tolerance = 1e-9;
      const int m = detail::qubits_for_dim(dim, "povm_bound");
      const double cap = 0.5 / std::sqrt(2.0 / dim);
      for (int s = 0; s < samples; ++s) {
        const BinaryPovmBloch p = random_valid_povm(m, rng);
        const double norm = p.alpha.norm();
        tracker.record("norm_cap", std::max(0.0, norm - cap));
        tracker.record("alpha0_dependent_cap",
                       std::max(0.0, inner(p.alpha, p.alpha) -
                                         p.alpha0 * (1.0 - p.alpha0) * dim / 2.0));
        if (norm >= cap - 1e-9)
          tracker.record("equality_implies_projective", is_projective(p) ? 0.0 : 1.0);
      }
      break;
    }
    case Campaign::Mancinska: {
      rep.tolerance = 1e-9;
      for (int s = 0; s < samples; ++s) {
        const int k = 1 + static_cast<int>(rng.next_below(dim));
        const int d = 1 + static_cast<int>(rng.next_below(8));
        std::vector<std::vector<double>> mus(k, std::vector<double>(d));
        for (auto& mu : mus)
          for (double& x : mu) x = rng.next_gaussian();
        const MancinskaCheck generic = mancinska_check(mus);
        tracker.record("inequality", std::max(0.0, generic.lhs - generic.rhs));

        // Orthogonal sets meet the bound with equality.
        const int ko = 1 + static_cast<int>(rng.next_below(dim));
        const int ambient = ko + static_cast<int>(rng.next_below(4));
        auto orth = detail::random_orthogonal_set(ko, ambient, rng);
        const MancinskaCheck at_equality = mancinska_check(orth);
        tracker.record("orthogonal_equality", std::abs(at_equality.lhs - at_equality.rhs));

        // A forced inner product >= 0.1 |mu_0||mu_1| must break equality
        // by a margin.
        if (ko >= 2) {
          const double gamma = 0.1 + 0.4 * rng.next_double();
          double n0 = 0.0, n1 = 0.0;
          for (double x : orth[0]) n0 += x * x;
          for (double x : orth[1]) n1 += x * x;
          const double mix = gamma * std::sqrt(n1 / n0);
          for (std::size_t j = 0; j < orth[1].size(); ++j) {
            orth[1][j] = std::sqrt(1.0 - gamma * gamma) * orth[1][j] + mix * orth[0][j];
          }
          const MancinskaCheck perturbed = mancinska_check(orth);
          tracker.record("nonorthogonal_strict",
                         std::max(0.0, 1e-6 - (perturbed.rhs - perturbed.lhs)));
          tracker.record("nonorthogonal_not_flagged_equal", perturbed.equality ? 1.0 : 0.0);
        }
      }
      break;
    }
    case Campaign::Parseval: {
      rep.tolerance = 1e-9;
      for (int s = 0; s < samples; ++s) {
        const int k = 1 + static_cast<int>(rng.next_below(dim));
        const int d = 1 + static_cast<int>(rng.next_below(8));
        std::vector<std::vector<double>> mus(k, std::vector<double>(d));
        for (auto& mu : mus)
          for (double& x : mu) x = rng.next_gaussian();
        const ParsevalCheck chk = parseval_sign_identity(mus);
        tracker.record("identity", std::abs(chk.lhs - chk.rhs));
      }
      break;
    }
    case Campaign::Midpoint: {
      rep.tolerance = 1e-9;
      const GeometryConstants g = geometry_constants(dim);
      const double mid_norm = std::sqrt(g.R * g.R - 1.0);
      for (int s = 0; s < samples; ++s) {
        const auto [b1, b2] = random_orthogonal_pure_pair(dim, rng);
        const MidpointConstruction mc = midpoint_construction(b1, b2);
        tracker.record("mid_norm", std::abs(mc.mid.norm() - mid_norm));
        if (dim == 2) {
          tracker.record("collapses_at_dim_2", mc.opposite_defined ? 1.0 : 0.0);
        } else {
          tracker.record("mid_on_boundary",
                         std::abs(min_eigenvalue(bloch_to_density(mc.mid))));
          tracker.record("opposite_on_boundary",
                         std::abs(min_eigenvalue(bloch_to_density(mc.opposite))));
        }
      }
      break;
    }
  }

  rep.max_violation = tracker.worst();
  rep.components = tracker.components();
  rep.pass = rep.max_violation <= rep.tolerance;
  return rep;
}

inline CampaignReport run_campaign(const std::string& name, int dim, int samples,
                                   std::uint64_t seed) {
  return run_campaign(campaign_from_name(name), dim, samples, seed);
}

}  // namespace qrac
