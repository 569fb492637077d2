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

#include "crossplay/meta.h"

#include <random>

#include <doctest.h>

#include "crossplay/games.h"
#include "test_util.h"

namespace crossplay {
namespace {

TEST_CASE("payoff table: single symmetric pairing is zero") {
  const TeamGame game = MakeTeamRps();
  const std::vector<ProductPolicy> pop = {ProductPolicy::Uniform(2, 2)};
  const PayoffTable table = FillPayoffs(game, pop, pop);
  CHECK(table.rows == 1);
  CHECK(table.cols == 1);
  CHECK(table.at(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("payoff table: pure team RPS population recovers the cycle matrix") {
  const TeamGame game = MakeTeamRps();
  const std::vector<ProductPolicy> pop = {TeamRpsPureMove(kRock),
                                          TeamRpsPureMove(kPaper),
                                          TeamRpsPureMove(kScissors)};
  const PayoffTable table = FillPayoffs(game, pop, pop);
  const std::vector<double> expected = {0, -1, 1, 1, 0, -1, -1, 1, 0};
  CHECK(table.matrix == expected);
}

TEST_CASE("payoff table: incremental extension equals full recomputation") {
  const TeamGame game = MakeMotivating({});
  std::mt19937_64 rng(59);
  std::vector<ProductPolicy> pop = {test::RandomProductPolicy(game, rng)};
  PayoffTable incremental = FillPayoffs(game, pop, pop);
  for (int append = 0; append < 5; ++append) {
    pop.push_back(test::RandomProductPolicy(game, rng));
    ExtendPayoffs(game, incremental, pop, pop);
    const PayoffTable full = FillPayoffs(game, pop, pop);
    CHECK(incremental.matrix == full.matrix);
  }
  // Symmetric joint table antisymmetry.
  for (int r = 0; r < incremental.rows; ++r) {
    for (int c = 0; c < incremental.cols; ++c) {
      CHECK(incremental.at(r, c) + incremental.at(c, r) ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("uniform solver") {
  CHECK(SolveUniform(1) == MetaPolicy{1.0});
  const MetaPolicy w = SolveUniform(3);
  CHECK(w.size() == 3);
  double sum = 0.0;
  for (double v : w) {
    CHECK(v == doctest::Approx(1.0 / 3));
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("Nash solver: RPS mixes to one third each") {
  PayoffTable table;
  table.rows = table.cols = 3;
  table.matrix = {0, -1, 1, 1, 0, -1, -1, 1, 0};
  const NashResult nash = SolveNashZeroSum(table, 1e-6);
  CHECK(nash.certificate <= 1e-6);
  for (double w : nash.row) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-3));
  CHECK(nash.value == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("Nash solver: matching pennies") {
  PayoffTable table;
  table.rows = table.cols = 2;
  table.matrix = {1, -1, -1, 1};
  const NashResult nash = SolveNashZeroSum(table, 1e-6);
  CHECK(nash.certificate <= 1e-6);
  CHECK(nash.row[0] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(nash.col[0] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(nash.value == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("Nash solver: strictly dominant row becomes pure") {
  PayoffTable table;
  table.rows = 3;
  table.cols = 2;
  table.matrix = {1.0, 2.0, 0.1, 0.3, -1.0, 0.0};
  const NashResult nash = SolveNashZeroSum(table, 1e-6);
  CHECK(nash.certificate <= 1e-6);
  CHECK(nash.row[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(nash.value == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("Nash solver certificates hold on random matrices") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    PayoffTable table;
    table.rows = size(rng);
    table.cols = size(rng);
    table.matrix.resize(static_cast<size_t>(table.rows) * table.cols);
    for (double& v : table.matrix) v = entry(rng);
    const NashResult nash = SolveNashZeroSum(table, 1e-6);
    // Independent pure-deviation scan.
    double value = 0.0;
    for (int r = 0; r < table.rows; ++r) {
      for (int c = 0; c < table.cols; ++c) {
        value += nash.row[r] * nash.col[c] * table.at(r, c);
      }
    }
    double best_row = -1e300, best_col = -1e300;
    for (int r = 0; r < table.rows; ++r) {
      double payoff = 0.0;
      for (int c = 0; c < table.cols; ++c) {
        payoff += nash.col[c] * table.at(r, c);
      }
      best_row = std::max(best_row, payoff);
    }
    for (int c = 0; c < table.cols; ++c) {
      double payoff = 0.0;
      for (int r = 0; r < table.rows; ++r) {
        payoff -= nash.row[r] * table.at(r, c);
      }
      best_col = std::max(best_col, payoff);
    }
    CHECK((best_row - value) + (best_col + value) <= 1e-6);
  }
}

TEST_CASE("symmetric Nash solve returns a single self-playable strategy") {
  PayoffTable table;
  table.rows = table.cols = 3;
  table.matrix = {0, -1, 1, 1, 0, -1, -1, 1, 0};
  const MetaPolicy sigma = SolveNashSymmetric(table, 1e-6);
  CHECK(RestrictedExploitability(table, sigma, sigma) <= 2e-6);
}

TEST_CASE("prioritized main scores: zero-score fallback and hard opponents") {
  const TeamGame game = MakeTeamRps();
  // Scissors never beats rock: uniform fallback.
  CHECK(PrioritizedScoresMain(game, TeamRpsPureMove(kRock),
                              {TeamRpsPureMove(kScissors)}) ==
        MetaPolicy{1.0});
  // Paper beats rock, rock does not beat itself.
  const MetaPolicy w = PrioritizedScoresMain(
      game, TeamRpsPureMove(kRock),
      {TeamRpsPureMove(kRock), TeamRpsPureMove(kPaper)});
  CHECK(w[0] == 0.0);
  CHECK(w[1] == 1.0);
  // Identical copies share weight equally.
  const MetaPolicy equal = PrioritizedScoresMain(
      game, TeamRpsPureMove(kRock),
      {TeamRpsPureMove(kPaper), TeamRpsPureMove(kPaper)});
  CHECK(equal == MetaPolicy{0.5, 0.5});
}

TEST_CASE("prioritized counter scores: win-times-lose curriculum") {
  const TeamGame game = MakeTeamRps();
  // All draws against an identical deterministic policy: zero score.
  const MetaPolicy w = PrioritizedScoresCounter(
      game, TeamRpsPureMove(kRock),
      {TeamRpsPureMove(kRock), TeamRpsPureMove(kPaper)});
  // Rock vs rock always draws (score 0); paper always wins (lose rate 0).
  CHECK(w == MetaPolicy{0.5, 0.5});  // all-zero scores fall back to uniform

  // A mixed opponent of even strength gets the largest product.
  MixturePolicy even;
  even.members = {TeamRpsPureMove(kRock), TeamRpsPureMove(kPaper),
                  TeamRpsPureMove(kScissors)};
  even.weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const WinProbability wp = ComputeWinProbability(game, even, even);
  CHECK(wp.win * wp.lose == doctest::Approx(1.0 / 9).epsilon(1e-12));
}

}  // namespace
}  // namespace crossplay
