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

#include "crossplay/trainers.h"

#include <doctest.h>

#include "crossplay/games.h"

namespace crossplay {
namespace {

TrainConfig SmallMotivatingConfig(Algorithm algorithm) {
  TrainConfig config;
  config.algorithm = algorithm;
  config.total_steps = 200;
  config.steps_per_iter = 40;
  return config;
}

TEST_CASE("run records are deterministic and well-formed") {
  const TeamGame game = MakeMotivating({});
  for (Algorithm algorithm : {Algorithm::kSp, Algorithm::kFsp, Algorithm::kPsro,
                              Algorithm::kOdo, Algorithm::kFxp}) {
    const TrainConfig config = SmallMotivatingConfig(algorithm);
    const RunRecord a = RunTraining(game, config);
    const RunRecord b = RunTraining(game, config);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].step == b.points[i].step);
      CHECK(a.points[i].exploitability == b.points[i].exploitability);
      if (i > 0) CHECK(a.points[i].step > a.points[i - 1].step);
      CHECK(a.points[i].exploitability >= -1e-9);
    }
    CHECK(a.convergence_step == b.convergence_step);
  }
}

TEST_CASE("self-play on a constant-zero game drifts to action zero") {
  const TeamGame game = TeamGame::FromOracle(
      2, 2, [](const JointAction&, const JointAction&) { return 0.0; }, true);
  TrainConfig config;
  config.total_steps = 100;
  const RunRecord record = RunSp(game, config, TeamExploitabilityEval());
  // Argmax ties break toward action 0, so mass accumulates there.
  CHECK(record.evaluated.members[0].dists[0][0] > 0.99);
  CHECK(record.evaluated.members[0].dists[1][0] > 0.99);
}

TEST_CASE("FSP with eta = 1 reproduces self-play exactly") {
  const TeamGame game = MakeMotivating({});
  TrainConfig config;
  config.total_steps = 150;
  config.eta = 1.0;
  const RunRecord sp = RunSp(game, config, TeamExploitabilityEval());
  const RunRecord fsp = RunFsp(game, config, TeamExploitabilityEval());
  // The FSP record evaluates the average policy, so compare trajectories via
  // the final current policy instead.
  REQUIRE(fsp.main_population.size() == 1);
  CHECK(fsp.main_population[0].dists == sp.main_population[0].dists);
}

TEST_CASE("FSP matches a hand-rolled mixture-based reference") {
  const TeamGame game = MakeMotivating({});
  TrainConfig config;
  config.total_steps = 30;
  config.eta = 0.3;
  const RunRecord fast = RunFsp(game, config, TeamExploitabilityEval());

  // Reference: build the opponent as an explicit mixture with the weights
  // {eta, (1 - eta) / t, ...} and step the same learner.
  LearnerOptions options;
  Learner learner(3, 2, options);
  std::vector<ProductPolicy> history = {learner.policy()};
  for (int64_t t = 1; t <= config.total_steps; ++t) {
    MixturePolicy mu;
    mu.members = {learner.policy()};
    mu.weights = FspMixtureWeights(t, config.eta);
    for (const ProductPolicy& past : history) mu.members.push_back(past);
    const QResult q = ComputeQ(game, learner.policy(), mu);
    learner.Step(q.q, q.value);
    history.push_back(learner.policy());
  }
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a < 2; ++a) {
      CHECK(fast.main_population[0].dists[i][a] ==
            doctest::Approx(learner.policy().dists[i][a]).epsilon(1e-12));
    }
  }
}

TEST_CASE("population sizes grow by one per iteration") {
  const TeamGame game = MakeMotivating({});
  TrainConfig config;
  config.total_steps = 200;
  config.steps_per_iter = 50;

  config.algorithm = Algorithm::kPsro;
  const RunRecord psro = RunPsro(game, config, TeamExploitabilityEval());
  CHECK(psro.main_population.size() == 5);  // initial + 4 iterations

  config.algorithm = Algorithm::kFxp;
  const RunRecord fxp = RunFxp(game, config, TeamExploitabilityEval());
  // 200 total steps at 50 per policy per iteration = 2 iterations.
  CHECK(fxp.main_population.size() == 3);
  CHECK(fxp.counter_population.size() == 3);
}

TEST_CASE("FXP with eta = 1 trains a pure self-play main policy") {
  const TeamGame game = MakeMotivating({});
  TrainConfig sp_config;
  sp_config.total_steps = 120;
  const RunRecord sp = RunSp(game, sp_config, TeamExploitabilityEval());

  TrainConfig fxp_config;
  fxp_config.algorithm = Algorithm::kFxp;
  fxp_config.total_steps = 240;  // main + counter both counted
  fxp_config.steps_per_iter = 60;
  fxp_config.eta = 1.0;
  const RunRecord fxp = RunFxp(game, fxp_config, TeamExploitabilityEval());
  // Main policy saw 120 self-play steps in two iterations.
  CHECK(fxp.main_population.back().dists == sp.main_population[0].dists);
}

TEST_CASE("FXP at eta = 0 with resets mirrors uniform PSRO") {
  const TeamGame game = MakeMotivating({});
  TrainConfig psro_config;
  psro_config.algorithm = Algorithm::kPsro;
  psro_config.total_steps = 120;
  psro_config.steps_per_iter = 40;
  psro_config.meta_solver = MetaSolverKind::kUniform;
  psro_config.psro_reset = true;
  const RunRecord psro = RunPsro(game, psro_config, TeamExploitabilityEval());

  TrainConfig fxp_config;
  fxp_config.algorithm = Algorithm::kFxp;
  fxp_config.total_steps = 240;
  fxp_config.steps_per_iter = 40;
  fxp_config.eta = 0.0;
  fxp_config.main_reset = true;
  fxp_config.counter_reset = true;
  fxp_config.meta_solver = MetaSolverKind::kUniform;
  fxp_config.counter_solver = MetaSolverKind::kUniform;
  const RunRecord fxp = RunFxp(game, fxp_config, TeamExploitabilityEval());

  REQUIRE(fxp.main_population.size() == psro.main_population.size());
  for (size_t m = 0; m < psro.main_population.size(); ++m) {
    for (int i = 0; i < 3; ++i) {
      for (int a = 0; a < 2; ++a) {
        CHECK(fxp.main_population[m].dists[i][a] ==
              doctest::Approx(psro.main_population[m].dists[i][a])
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("plateau detector") {
  const ProductPolicy steady = ProductPolicy::Uniform(2, 2);
  SUBCASE("constant history plateaus after the window") {
    std::vector<ProductPolicy> history(6, steady);
    CHECK(DetectPlateau(history, 1e-6, 5));
    CHECK_FALSE(DetectPlateau({history.begin(), history.begin() + 4}, 1e-6, 5));
  }
  SUBCASE("oscillation above tolerance never plateaus") {
    ProductPolicy other = steady;
    other.dists[0] = {0.6, 0.4};
    std::vector<ProductPolicy> history;
    for (int i = 0; i < 20; ++i) {
      history.push_back(i % 2 == 0 ? steady : other);
    }
    CHECK_FALSE(DetectPlateau(history, 1e-6, 3));
  }
  SUBCASE("a converging stepwise run plateaus within its budget") {
    const TeamGame game = MakeMotivating({});
    LearnerOptions options;
    Learner learner(3, 2, options);
    const auto opponent = game.ColFeatureExpectation(
        ProductPolicy::Deterministic({1, 1, 1}, 2));
    std::vector<ProductPolicy> history = {learner.policy()};
    for (int t = 0; t < 400; ++t) {
      const QResult q =
          ComputeQFromColFeatures(game, learner.policy(), opponent);
      learner.Step(q.q, q.value);
      history.push_back(learner.policy());
    }
    CHECK(DetectPlateau(history, 1e-6, 20));
  }
}

TEST_CASE("PSRO with the Nash solver never ends worse than it started") {
  const TeamGame game = MakeMotivating({});
  TrainConfig config;
  config.algorithm = Algorithm::kPsro;
  config.total_steps = 400;
  config.steps_per_iter = 40;
  config.meta_solver = MetaSolverKind::kNash;
  const RunRecord record = RunPsro(game, config, TeamExploitabilityEval());
  CHECK(record.points.back().exploitability <=
        record.points.front().exploitability + 1e-9);
}

TEST_CASE("config validation rejects out-of-range values") {
  TrainConfig config;
  config.eta = 1.5;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
  config.eta = 0.3;
  config.total_steps = 0;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
  config.total_steps = 10;
  config.eta_decay = 0.0;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace crossplay
