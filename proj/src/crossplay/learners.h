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

#ifndef CROSSPLAY_LEARNERS_H_
#define CROSSPLAY_LEARNERS_H_

#include <span>
#include <string>
#include <vector>

#include "crossplay/game.h"
#include "crossplay/games.h"

namespace crossplay {

// Per-agent expected utility of each own action given teammates' policy and
// an opponent mixture: Q[i][a] = E_{x_{-i} ~ pi_{-i}, y ~ mu} U([a, x_{-i}], y).
using QTable = std::vector<std::vector<double>>;

struct QResult {
  QTable q;
  // E_{x ~ pi, y ~ mu} U(x, y); the baseline V used by regret updates.
  double value = 0.0;
};

// Exact Q by enumeration over teammate joint actions and the opponent
// mixture.
QResult ComputeQ(const TeamGame& game, const ProductPolicy& pi,
                 const MixturePolicy& mu);

// Same, given precomputed aggregated column features of the opponent.
QResult ComputeQFromColFeatures(const TeamGame& game, const ProductPolicy& pi,
                                std::span<const double> col_features);

enum class UpdateRule {
  kStepwiseBr,   // pi' = (1-lr) pi + lr onehot(argmax Q)
  kForel,        // accumulate lr_t Q, pi = softmax
  kReplicator,   // pi' = pi + dt pi (Q - <pi, Q>), clipped to the simplex
  kMwu,          // pi' proportional to pi * softmax(k Q)
  kCfr,          // regret matching on accumulated Q - V
};

UpdateRule UpdateRuleFromString(const std::string& name);
std::string UpdateRuleToString(UpdateRule rule);

struct LearnerOptions {
  UpdateRule rule = UpdateRule::kStepwiseBr;
  double lr = 0.1;            // stepwise best-response rate
  double forel_base_lr = 20;  // lr_t = forel_base_lr / sqrt(t)
  double replicator_dt = 0.8;
  double mwu_k = 10.0;
};

// Argmax ties within this margin resolve to the lowest action index, so exact
// mathematical indifference points land on the documented tie rule despite
// floating-point noise in the enumerated Q.
inline constexpr double kArgmaxTieTol = 1e-12;

// Single-agent update steps. Each returns a valid distribution.
std::vector<double> StepStepwiseBr(std::span<const double> pi,
                                   std::span<const double> q, double lr);
// Accumulates lr_t * q into `accumulator` and returns its softmax.
std::vector<double> StepForel(std::vector<double>& accumulator,
                              std::span<const double> q, double lr_t);
std::vector<double> StepReplicator(std::span<const double> pi,
                                   std::span<const double> q, double dt);
std::vector<double> StepMwu(std::span<const double> pi,
                            std::span<const double> q, double k);
// Accumulates q - value into `regrets` and returns the positive-part match;
// uniform when no regret is positive.
std::vector<double> StepCfr(std::vector<double>& regrets,
                            std::span<const double> q, double value);

// One team's learning state: the current product policy plus the per-rule
// accumulators, stepped once per Q observation.
class Learner {
 public:
  Learner(int num_agents, int num_actions, LearnerOptions options);

  // Re-seeds the state so that the current policy equals `policy` under the
  // configured rule (log- or regret-domain for FoReL/CFR accumulators).
  void InitializeAt(const ProductPolicy& policy);

  void Step(const QTable& q, double value);

  const ProductPolicy& policy() const { return policy_; }
  int64_t step_count() const { return step_count_; }

 private:
  int num_agents_;
  int num_actions_;
  LearnerOptions options_;
  int64_t step_count_ = 0;
  ProductPolicy policy_;
  std::vector<std::vector<double>> accumulators_;  // FoReL sums / CFR regrets
};

// Opponent mixture weights for fictitious self-play at step t (t stored past
// policies): eta on the current policy, (1 - eta) / t on each past one. The
// returned vector is {eta, (1-eta)/t, ..., (1-eta)/t} of length t + 1.
std::vector<double> FspMixtureWeights(int64_t t, double eta);

// A trajectory entry pairs the policy in force at step t with the Q-values
// observed at that step (which produced the next policy).
struct TrajectoryPoint {
  ProductPolicy policy;
  QTable q;
};

struct PreferenceViolation {
  int agent = 0;
  int preferred_action = 0;
  int other_action = 0;
  int64_t step = 0;  // ratio decreased between step and step + 1
};

// Checks that whenever Q_i(x) >= Q_i(y) has held at every step so far, the
// probability ratio pi_i(x) / pi_i(y) never decreases (compared by
// cross-multiplication so zero denominators are exact).
std::vector<PreferenceViolation> CheckPreferencePreservation(
    const std::vector<TrajectoryPoint>& trajectory);

// 1 / (N + 1 + 2C + eps): the initialization bound below which no
// preference-preserving self-play run reaches the all-zeros equilibrium.
double Theorem1Threshold(const MotivatingParams& params);

}  // namespace crossplay

#endif  // CROSSPLAY_LEARNERS_H_
