// Copyright 2026 The Crossplay Authors
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

#include "crossplay/games.h"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "crossplay/learners.h"
#include "test_util.h"

namespace crossplay {
namespace {

TEST_CASE("team RPS: move mapping and the full payoff cycle") {
  const TeamGame game = MakeTeamRps();
  // (0,0) is Rock, (1,1) is Scissors, splits are Paper.
  CHECK(game.utility({0, 0}, {1, 1}) == 1.0);   // rock beats scissors
  CHECK(game.utility({1, 1}, {0, 1}) == 1.0);   // scissors beats paper
  CHECK(game.utility({0, 1}, {0, 0}) == 1.0);   // paper beats rock
  CHECK(game.utility({0, 1}, {1, 0}) == 0.0);   // paper ties paper
  CHECK(game.utility({0, 0}, {0, 0}) == 0.0);
  CHECK(game.utility({1, 1}, {1, 1}) == 0.0);
  // Scissors is a local NE: the unilateral deviation (paper) loses.
  CHECK(game.utility({0, 1}, {1, 1}) == -1.0);
}

TEST_CASE("team RPS: move distribution of mixtures") {
  MixturePolicy sigma;
  sigma.members = {TeamRpsPureMove(kRock), TeamRpsPureMove(kPaper),
                   TeamRpsPureMove(kScissors)};
  sigma.weights = {0.5, 0.25, 0.25};
  const auto dist = TeamRpsMoveDistribution(sigma);
  CHECK(dist[kRock] == doctest::Approx(0.5));
  CHECK(dist[kPaper] == doctest::Approx(0.25));
  CHECK(dist[kScissors] == doctest::Approx(0.25));

  const auto uniform_policy =
      MixturePolicy::Single(ProductPolicy::Uniform(2, 2));
  const auto udist = TeamRpsMoveDistribution(uniform_policy);
  CHECK(udist[kRock] == doctest::Approx(0.25));
  CHECK(udist[kPaper] == doctest::Approx(0.5));
  CHECK(udist[kScissors] == doctest::Approx(0.25));
}

TEST_CASE("motivating game: displayed utility cases") {
  const MotivatingParams params{3, 1.5, 0.1};
  const TeamGame game = MakeMotivating(params);
  CHECK(game.utility({0, 0, 0}, {1, 1, 0}) == doctest::Approx(0.2));
  CHECK(game.utility({1, 0, 0}, {1, 1, 0}) == doctest::Approx(-1.0));
  CHECK(game.utility({1, 1, 1}, {0, 0, 0}) == doctest::Approx(-1.5));
  CHECK(game.utility({0, 0, 0}, {1, 1, 1}) == doctest::Approx(1.5));
  CHECK(game.utility({0, 0, 0}, {0, 0, 0}) == 0.0);
  CHECK(game.utility({1, 0, 1}, {0, 1, 0}) == doctest::Approx(1.0));
}

TEST_CASE("motivating game rejects bad parameters") {
  CHECK_THROWS_AS(MakeMotivating({3, 4.0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(MakeMotivating({3, 1.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(MakeMotivating({3, 0.05, 0.1}), std::invalid_argument);
}

TEST_CASE("motivating delta-Q: closed form on deterministic corners") {
  const MotivatingParams params{3, 1.5, 0.1};
  const auto all_ones = ProductPolicy::Deterministic({1, 1, 1}, 2);

  // Teammates sure of action 0 against all-ones: (N + C) - 1.
  CHECK(MotivatingDeltaQ(params, {{1, 0}, {1, 0}}, all_ones) ==
        doctest::Approx(3.5).epsilon(1e-12));
  // Teammates sure of action 1 against all-ones: -1.
  CHECK(MotivatingDeltaQ(params, {{0, 1}, {0, 1}}, all_ones) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // Indifference point: teammate product exactly 1/(N + C).
  const double p = std::sqrt(1.0 / 4.5);
  CHECK(std::abs(MotivatingDeltaQ(params, {{p, 1 - p}, {p, 1 - p}},
                                  all_ones)) < 1e-12);
}

TEST_CASE("motivating delta-Q matches brute-force Q differences") {
  const MotivatingParams params{3, 1.5, 0.1};
  const TeamGame game = MakeMotivating(params);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const ProductPolicy pi = test::RandomProductPolicy(game, rng);
    const ProductPolicy mu = test::RandomProductPolicy(game, rng);
    const QResult q = ComputeQ(game, pi, MixturePolicy::Single(mu));
    for (int i = 0; i < 3; ++i) {
      std::vector<std::vector<double>> teammates;
      for (int j = 0; j < 3; ++j) {
        if (j != i) teammates.push_back(pi.dists[j]);
      }
      const double analytic = MotivatingDeltaQ(params, teammates, mu);
      CHECK(std::abs(q.q[i][0] - q.q[i][1] - analytic) < 1e-12);
    }
  }
}

TEST_CASE("SAD: reward level, seeking reward, and attack/defend rules") {
  const SadParams params;  // N=4, A=4, R_x = x
  const TeamGame game = MakeSad(params);
  const int atk = params.attack_action();
  const int def = params.defend_action();

  // Undefended seekers lose everything to a double attack.
  CHECK(game.utility({4, 4, 4, 4}, {atk, atk, 4, 4}) == -8.0);
  // A single defender nullifies it.
  CHECK(game.utility({def, 4, 4, 4}, {atk, atk, 4, 4}) == 4.0);
  // Identical teams tie.
  CHECK(game.utility({4, 4, 4, 4}, {4, 4, 4, 4}) == 0.0);
  // Scattered seeking actions drop the level to zero: only seeks in {0, 1}
  // still pay.
  CHECK(game.utility({0, 0, 1, 2}, {4, 4, 4, 4}) == -15.0);
  CHECK(game.utility({2, 3, 3, 4}, {4, 4, 4, 4}) == -16.0);
  // One attacker is not enough.
  CHECK(game.utility({4, 4, 4, 4}, {atk, 4, 4, 4}) == 4.0);
  // No seekers means no seeking reward.
  CHECK(game.utility({def, def, def, def}, {4, 4, 4, 4}) == -16.0);
  // A team of attackers wipes the undefended seekers and scores nothing.
  CHECK(game.utility({atk, atk, def, def}, {4, 4, 4, 4}) == 0.0);
  // Adjacent seeking levels both count.
  CHECK(game.utility({3, 4, 4, 4}, {4, 4, 4, 4}) == -1.0);
}

TEST_CASE("SAD utility matches the from-the-rules oracle on random pairs") {
  const SadParams params;
  const TeamGame game = MakeSad(params);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const JointAction x = test::RandomJoint(game, rng);
    const JointAction y = test::RandomJoint(game, rng);
    CHECK(game.utility(x, y) == test::SadRuleUtility(params, x, y));
  }
}

TEST_CASE("SAD utility is invariant to permuting agents within a team") {
  const SadParams params;
  const TeamGame game = MakeSad(params);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    JointAction x = test::RandomJoint(game, rng);
    const JointAction y = test::RandomJoint(game, rng);
    const double before = game.utility(x, y);
    std::shuffle(x.begin(), x.end(), rng);
    CHECK(game.utility(x, y) == before);
  }
}

TEST_CASE("SAD rejects invalid parameters") {
  SadParams bad;
  bad.rewards = {0.0, 1.0, 1.0, 3.0, 4.0};  // not strictly increasing
  CHECK_THROWS_AS(MakeSad(bad), std::invalid_argument);
  bad.rewards = {1.0, 2.0, 3.0, 4.0, 5.0};  // R_0 != 0
  CHECK_THROWS_AS(MakeSad(bad), std::invalid_argument);
  bad.rewards = {0.0, 1.0};  // wrong length
  CHECK_THROWS_AS(MakeSad(bad), std::invalid_argument);
}

TEST_CASE("SAD reference policies: the claimed NE mixes to indifference") {
  const SadParams params;
  const TeamGame game = MakeSad(params);
  const SadReferencePolicies refs = MakeSadReferencePolicies(params);

  CHECK(refs.star.weights == std::vector<double>{0.25, 0.25, 0.5});

  const auto u_vs_star = [&](const ProductPolicy& policy) {
    return ExpectedUtility(game, MixturePolicy::Single(policy), refs.star);
  };
  CHECK(u_vs_star(refs.seek) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(u_vs_star(refs.attack) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(u_vs_star(refs.defend) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Head-to-head values behind the indifference.
  const auto u = [&](const ProductPolicy& a, const ProductPolicy& b) {
    return ExpectedUtility(game, MixturePolicy::Single(a),
                           MixturePolicy::Single(b));
  };
  CHECK(u(refs.seek, refs.attack) == -8.0);
  CHECK(u(refs.seek, refs.defend) == 4.0);
  CHECK(u(refs.attack, refs.defend) == -4.0);
}

TEST_CASE("SAD exploitability of the references") {
  const SadParams params;
  const TeamGame game = MakeSad(params);
  const SadReferencePolicies refs = MakeSadReferencePolicies(params);

  CHECK(SadExploitability(game, params, refs.star) == 0.0);
  CHECK(SadExploitability(game, params,
                          MixturePolicy::Single(refs.seek)) == 8.0);
  CHECK(SadExploitability(game, params,
                          MixturePolicy::Single(refs.defend)) == 4.0);
}

TEST_CASE("SAD: the reference mixture is a global NE for small max-seek too") {
  for (int max_seek : {2, 3, 4}) {
    SadParams params;
    params.max_seek = max_seek;
    const TeamGame game = MakeSad(params);
    const SadReferencePolicies refs = MakeSadReferencePolicies(params);
    CHECK(TeamExploitability(game, refs.star) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("matrix loader builds plain zero-sum games") {
  // Single-agent rock-paper-scissors.
  const TeamGame game = MakeMatrixGame(
      1, 3, {0, -1, 1, 1, 0, -1, -1, 1, 0}, /*symmetric=*/true);
  CHECK(game.utility({1}, {0}) == 1.0);
  CHECK(game.utility({2}, {0}) == -1.0);
  const auto uniform = MixturePolicy::Single(ProductPolicy::Uniform(1, 3));
  CHECK(TeamExploitability(game, uniform) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

}  // namespace
}  // namespace crossplay
