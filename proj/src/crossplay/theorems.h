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

#ifndef CROSSPLAY_THEOREMS_H_
#define CROSSPLAY_THEOREMS_H_

#include <cstdint>
#include <vector>

#include "crossplay/games.h"
#include "crossplay/learners.h"

namespace crossplay {

// Empirical checks for the two decentralized-learning claims on the
// motivating game: preference-preserving self-play started below the
// 1/(N+1+2C+eps) bound never reaches the all-zeros equilibrium, and training
// against the fixed all-ones opponent strictly enlarges the set of good
// initializations.

inline const std::vector<UpdateRule> kPreferencePreservingRules = {
    UpdateRule::kStepwiseBr, UpdateRule::kForel, UpdateRule::kReplicator,
    UpdateRule::kMwu, UpdateRule::kCfr};

struct SubThresholdRunReport {
  UpdateRule rule;
  int trial = 0;
  double final_exploitability = 0.0;
  bool converged = false;  // reached the global NE within the budget
  int64_t violations = 0;  // preference-preservation violations on the path
};

struct Theorem1Report {
  double threshold = 0.0;
  int trials = 0;
  int converged_runs = 0;
  int64_t total_violations = 0;
  std::vector<SubThresholdRunReport> runs;
};

// Samples `trials` random initializations with every agent's teammate
// product below the threshold, runs each preference-preserving rule in
// self-play for `steps` steps, and reports convergence counts plus
// preference-preservation violations.
Theorem1Report RunTheorem1Check(const MotivatingParams& params, int trials,
                                int64_t steps, uint64_t seed,
                                double convergence_threshold = 1e-2);

struct Theorem2Report {
  std::vector<double> grid;  // symmetric initializations P(action 0)
  std::vector<bool> sp_good;
  std::vector<bool> fixed_opponent_good;
  double special_point = 0.0;  // (N+C)^(-1/(N-1))
  bool special_point_sp_good = false;
  bool special_point_fixed_good = false;
  bool subset_holds = false;         // S_SP contained in S_mu
  bool strictly_larger = false;      // S_mu \ S_SP non-empty on the grid
};

// Sweeps symmetric initializations p = pi_i(0) over {0.01, ..., 0.99} plus
// the closed-form indifference point, running self-play and fixed all-ones
// opponent training with the same update rule.
Theorem2Report RunTheorem2Check(const MotivatingParams& params, int64_t steps,
                                UpdateRule rule = UpdateRule::kStepwiseBr,
                                double convergence_threshold = 1e-2);

}  // namespace crossplay

#endif  // CROSSPLAY_THEOREMS_H_
