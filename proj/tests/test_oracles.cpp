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

#include <catch2/catch_amalgamated.hpp>

#include "qrac/lemma_oracles.hpp"
#include "test_helpers.hpp"

using namespace qrac;
using Catch::Matchers::WithinAbs;

TEST_CASE("signed-sum inequality on hand cases", "[oracles]") {
  const MancinskaCheck orth = mancinska_check({{1, 0}, {0, 1}});
  CHECK_THAT(orth.lhs, WithinAbs(4.0 * std::sqrt(2.0), 1e-12));
  CHECK_THAT(orth.rhs, WithinAbs(4.0 * std::sqrt(2.0), 1e-12));
  CHECK(orth.equality);

  const MancinskaCheck aligned = mancinska_check({{1, 0}, {1, 0}});
  CHECK_THAT(aligned.lhs, WithinAbs(4.0, 1e-12));
  CHECK_THAT(aligned.rhs, WithinAbs(4.0 * std::sqrt(2.0), 1e-12));
  CHECK_FALSE(aligned.equality);

  const MancinskaCheck zeros = mancinska_check({{0, 0, 0}, {0, 0, 0}});
  CHECK(zeros.lhs == 0.0);
  CHECK(zeros.rhs == 0.0);
  CHECK(zeros.equality);

  CHECK_THROWS_AS(mancinska_check({{1, 0}, {1}}), ValidationError);
  CHECK_THROWS_AS(mancinska_check(std::vector<std::vector<double>>(13, {1.0})), ValidationError);
}

TEST_CASE("parallelogram-induction identity on hand cases", "[oracles]") {
  const ParsevalCheck base = parseval_sign_identity({{2}});
  CHECK_THAT(base.lhs, WithinAbs(8.0, 1e-12));
  CHECK_THAT(base.rhs, WithinAbs(8.0, 1e-12));

  const ParsevalCheck pair = parseval_sign_identity({{1, 0}, {1, 0}});
  CHECK_THAT(pair.lhs, WithinAbs(8.0, 1e-12));
  CHECK_THAT(pair.rhs, WithinAbs(8.0, 1e-12));

  SplitMix64 rng(41);
  std::vector<std::vector<double>> mus(6, std::vector<double>(5));
  for (auto& mu : mus)
    for (double& x : mu) x = rng.next_gaussian();
  const ParsevalCheck random = parseval_sign_identity(mus);
  CHECK_THAT(random.lhs, WithinAbs(random.rhs, 1e-9));
}

TEST_CASE("equality holds exactly for orthogonal sets", "[oracles][property]") {
  SplitMix64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng.next_below(6));
    auto orth = detail::random_orthogonal_set(k, k + 2, rng);
    const MancinskaCheck chk = mancinska_check(orth);
    CHECK(chk.equality);
    CHECK_THAT(chk.lhs, WithinAbs(chk.rhs, 1e-9));
  }
}

TEST_CASE("campaigns pass at small scale", "[oracles]") {
  for (const auto& [name, campaign] : campaign_names()) {
    const bool vector_campaign = campaign == Campaign::Mancinska || campaign == Campaign::Parseval;
    const int dim = vector_campaign ? 8 : 4;
    const CampaignReport rep = run_campaign(campaign, dim, 50, 2026);
    INFO(name << ": max violation " << rep.max_violation);
    CHECK(rep.pass);
    CHECK(rep.name == name);
    CHECK_FALSE(rep.components.empty());
  }
}

TEST_CASE("campaign lookup and validation", "[oracles]") {
  CHECK_THROWS_AS(run_campaign("no_such_lemma", 4, 10, 1), ValidationError);
  CHECK_THROWS_AS(run_campaign("obs3", 3, 10, 1), ValidationError);       // needs N = 2^m
  CHECK_THROWS_AS(run_campaign("povm_bound", 6, 10, 1), ValidationError);
  CHECK_THROWS_AS(run_campaign("hyperplane", 40, 10, 1), ValidationError);
  CHECK_THROWS_AS(run_campaign("hyperplane", 4, 0, 1), ValidationError);
  CHECK(campaign_from_name("midpoint") == Campaign::Midpoint);
}

TEST_CASE("campaigns are deterministic in the seed", "[oracles]") {
  const CampaignReport a = run_campaign("obs1", 3, 25, 9);
  const CampaignReport b = run_campaign("obs1", 3, 25, 9);
  CHECK(a.max_violation == b.max_violation);
  CHECK(a.components == b.components);
}

TEST_CASE("equality-orthogonality cross-check components are present", "[oracles]") {
  const CampaignReport rep = run_campaign("mancinska", 10, 200, 3);
  CHECK(rep.pass);
  bool saw_equality = false, saw_strict = false;
  for (const auto& [label, value] : rep.components) {
    saw_equality |= label == "orthogonal_equality";
    saw_strict |= label == "nonorthogonal_strict";
  }
  CHECK(saw_equality);
  CHECK(saw_strict);
}
