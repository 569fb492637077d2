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

#include "crossplay/theorems.h"

#include <cmath>
#include <random>

#include "crossplay/trainers.h"

namespace crossplay {
namespace {

// Self-play (or fixed-opponent) trajectory of a single update rule, recording
// (policy, Q) pairs. The opponent is the current policy unless
// `fixed_opponent` is given.
struct RuleRun {
  std::vector<TrajectoryPoint> trajectory;
  ProductPolicy final_policy;
};

RuleRun RunRule(const TeamGame& game, UpdateRule rule,
                const ProductPolicy& init, int64_t steps,
                const ProductPolicy* fixed_opponent) {
  LearnerOptions options;
  options.rule = rule;
  Learner learner(game.team_size(), game.action_count(), options);
  learner.InitializeAt(init);
  std::vector<double> fixed_feats;
  if (fixed_opponent != nullptr) {
    fixed_feats = game.ColFeatureExpectation(*fixed_opponent);
  }
  RuleRun run;
  run.trajectory.reserve(steps + 1);
  for (int64_t t = 0; t < steps; ++t) {
    const std::vector<double> feats =
        fixed_opponent != nullptr
            ? fixed_feats
            : game.ColFeatureExpectation(learner.policy());
    QResult q = ComputeQFromColFeatures(game, learner.policy(), feats);
    run.trajectory.push_back(TrajectoryPoint{learner.policy(), q.q});
    learner.Step(q.q, q.value);
  }
  run.trajectory.push_back(TrajectoryPoint{learner.policy(), {}});
  run.trajectory.back().q.assign(
      game.team_size(), std::vector<double>(game.action_count(), 0.0));
  run.final_policy = learner.policy();
  return run;
}

double PolicyExploitability(const TeamGame& game, const ProductPolicy& policy) {
  return TeamExploitability(game, MixturePolicy::Single(policy));
}

}  // namespace

Theorem1Report RunTheorem1Check(const MotivatingParams& params, int trials,
                                int64_t steps, uint64_t seed,
                                double convergence_threshold) {
  const TeamGame game = MakeMotivating(params);
  const double threshold = Theorem1Threshold(params);
  const int n = params.team_size;

  Theorem1Report report;
  report.threshold = threshold;
  report.trials = trials;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    // Rejection-sample P(action 0) per agent until every agent's teammate
    // product sits below the bound.
    ProductPolicy init;
    while (true) {
      std::vector<double> p(n);
      for (double& v : p) v = unit(rng);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        double mates = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j != i) mates *= p[j];
        }
        if (mates > threshold) ok = false;
      }
      if (!ok) continue;
      init.dists.assign(n, std::vector<double>(2, 0.0));
      for (int i = 0; i < n; ++i) {
        init.dists[i][0] = p[i];
        init.dists[i][1] = 1.0 - p[i];
      }
      break;
    }

    for (UpdateRule rule : kPreferencePreservingRules) {
      const RuleRun run = RunRule(game, rule, init, steps, nullptr);
      SubThresholdRunReport r;
      r.rule = rule;
      r.trial = trial;
      r.final_exploitability = PolicyExploitability(game, run.final_policy);
      r.converged = r.final_exploitability <= convergence_threshold;
      r.violations =
          static_cast<int64_t>(CheckPreferencePreservation(run.trajectory).size());
      report.converged_runs += r.converged ? 1 : 0;
      report.total_violations += r.violations;
      report.runs.push_back(std::move(r));
    }
  }
  return report;
}

Theorem2Report RunTheorem2Check(const MotivatingParams& params, int64_t steps,
                                UpdateRule rule,
                                double convergence_threshold) {
  const TeamGame game = MakeMotivating(params);
  const int n = params.team_size;

  Theorem2Report report;
  for (int i = 1; i <= 99; ++i) report.grid.push_back(i / 100.0);
  report.special_point =
      std::pow(params.team_size + params.bonus, -1.0 / (params.team_size - 1));

  const ProductPolicy all_ones =
      ProductPolicy::Deterministic(JointAction(n, 1), 2);

  const auto run_point = [&](double p, bool fixed) {
    ProductPolicy init;
    init.dists.assign(n, std::vector<double>{p, 1.0 - p});
    const RuleRun run =
        RunRule(game, rule, init, steps, fixed ? &all_ones : nullptr);
    return PolicyExploitability(game, run.final_policy) <=
           convergence_threshold;
  };

  bool subset = true;
  bool strict = false;
  for (double p : report.grid) {
    const bool sp = run_point(p, /*fixed=*/false);
    const bool fixed = run_point(p, /*fixed=*/true);
    report.sp_good.push_back(sp);
    report.fixed_opponent_good.push_back(fixed);
    if (sp && !fixed) subset = false;
    if (fixed && !sp) strict = true;
  }
  report.special_point_sp_good = run_point(report.special_point, false);
  report.special_point_fixed_good = run_point(report.special_point, true);
  if (report.special_point_sp_good && !report.special_point_fixed_good) {
    subset = false;
  }
  if (report.special_point_fixed_good && !report.special_point_sp_good) {
    strict = true;
  }
  report.subset_holds = subset;
  report.strictly_larger = strict;
  return report;
}

}  // namespace crossplay
