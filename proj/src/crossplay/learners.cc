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

#include "crossplay/learners.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossplay {

QResult ComputeQFromColFeatures(const TeamGame& game, const ProductPolicy& pi,
                                std::span<const double> col_features) {
  game.ValidatePolicy(pi);
  const std::vector<double> values = game.RowValues(col_features);
  const int n = game.team_size();
  const int a = game.action_count();
  QResult result;
  result.q.assign(n, std::vector<double>(a, 0.0));

  // One pass over all joint actions, accumulating for every agent the
  // leave-one-out probability of its teammates via prefix/suffix products.
  JointAction digits(n, 0);
  std::vector<double> prefix(n + 1, 1.0);   // prefix[i] = P(digits[0..i-1])
  std::vector<double> suffix(n + 1, 1.0);   // suffix[i] = P(digits[i..n-1])
  const int64_t joints = game.num_joints();
  for (int64_t x = 0; x < joints; ++x) {
    for (int i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] * pi.dists[i][digits[i]];
    }
    for (int i = n - 1; i >= 0; --i) {
      suffix[i] = suffix[i + 1] * pi.dists[i][digits[i]];
    }
    const double v = values[x];
    for (int i = 0; i < n; ++i) {
      result.q[i][digits[i]] += prefix[i] * suffix[i + 1] * v;
    }
    result.value += prefix[n] * v;
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < a) break;
      digits[i] = 0;
    }
  }
  return result;
}

QResult ComputeQ(const TeamGame& game, const ProductPolicy& pi,
                 const MixturePolicy& mu) {
  return ComputeQFromColFeatures(game, pi, game.ColFeatureExpectation(mu));
}

UpdateRule UpdateRuleFromString(const std::string& name) {
  if (name == "stepwise_br") return UpdateRule::kStepwiseBr;
  if (name == "forel") return UpdateRule::kForel;
  if (name == "replicator") return UpdateRule::kReplicator;
  if (name == "mwu") return UpdateRule::kMwu;
  if (name == "cfr") return UpdateRule::kCfr;
  throw std::invalid_argument("unknown update rule: " + name);
}

std::string UpdateRuleToString(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::kStepwiseBr: return "stepwise_br";
    case UpdateRule::kForel: return "forel";
    case UpdateRule::kReplicator: return "replicator";
    case UpdateRule::kMwu: return "mwu";
    case UpdateRule::kCfr: return "cfr";
  }
  throw std::invalid_argument("unknown update rule enum");
}

namespace {

int ArgmaxLowest(std::span<const double> q) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(q.size()); ++a) {
    if (q[a] > q[best] + kArgmaxTieTol) best = a;
  }
  return best;
}

std::vector<double> Softmax(std::span<const double> logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t a = 0; a < logits.size(); ++a) {
    out[a] = std::exp(logits[a] - m);
    sum += out[a];
  }
  for (double& p : out) p /= sum;
  return out;
}

}  // namespace

std::vector<double> StepStepwiseBr(std::span<const double> pi,
                                   std::span<const double> q, double lr) {
  if (!(lr > 0.0 && lr <= 1.0)) {
    throw std::invalid_argument("StepStepwiseBr: lr must be in (0, 1]");
  }
  const int best = ArgmaxLowest(q);
  std::vector<double> out(pi.size());
  for (size_t a = 0; a < pi.size(); ++a) {
    out[a] = (1.0 - lr) * pi[a];
  }
  out[best] += lr;
  return out;
}

std::vector<double> StepForel(std::vector<double>& accumulator,
                              std::span<const double> q, double lr_t) {
  for (size_t a = 0; a < accumulator.size(); ++a) {
    accumulator[a] += lr_t * q[a];
  }
  return Softmax(accumulator);
}

std::vector<double> StepReplicator(std::span<const double> pi,
                                   std::span<const double> q, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("StepReplicator: dt > 0");
  double baseline = 0.0;
  for (size_t a = 0; a < pi.size(); ++a) baseline += pi[a] * q[a];
  std::vector<double> out(pi.size());
  double sum = 0.0;
  for (size_t a = 0; a < pi.size(); ++a) {
    out[a] = std::max(0.0, pi[a] * (1.0 + dt * (q[a] - baseline)));
    sum += out[a];
  }
  if (sum <= 0.0) return std::vector<double>(pi.begin(), pi.end());
  for (double& p : out) p /= sum;
  return out;
}

std::vector<double> StepMwu(std::span<const double> pi,
                            std::span<const double> q, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("StepMwu: k > 0");
  const double m = *std::max_element(q.begin(), q.end());
  std::vector<double> out(pi.size());
  double sum = 0.0;
  for (size_t a = 0; a < pi.size(); ++a) {
    out[a] = pi[a] * std::exp(k * (q[a] - m));
    sum += out[a];
  }
  if (sum <= 0.0) return std::vector<double>(pi.begin(), pi.end());
  for (double& p : out) p /= sum;
  return out;
}

std::vector<double> StepCfr(std::vector<double>& regrets,
                            std::span<const double> q, double value) {
  double positive_sum = 0.0;
  for (size_t a = 0; a < regrets.size(); ++a) {
    regrets[a] += q[a] - value;
    positive_sum += std::max(0.0, regrets[a]);
  }
  std::vector<double> out(regrets.size());
  if (positive_sum > 0.0) {
    for (size_t a = 0; a < regrets.size(); ++a) {
      out[a] = std::max(0.0, regrets[a]) / positive_sum;
    }
  } else {
    std::fill(out.begin(), out.end(), 1.0 / regrets.size());
  }
  return out;
}

Learner::Learner(int num_agents, int num_actions, LearnerOptions options)
    : num_agents_(num_agents),
      num_actions_(num_actions),
      options_(options),
      policy_(ProductPolicy::Uniform(num_agents, num_actions)) {
  InitializeAt(policy_);
}

void Learner::InitializeAt(const ProductPolicy& policy) {
  if (policy.num_agents() != num_agents_ ||
      policy.num_actions() != num_actions_) {
    throw std::invalid_argument("Learner::InitializeAt: dimension mismatch");
  }
  policy_ = policy;
  step_count_ = 0;
  accumulators_.assign(num_agents_, std::vector<double>(num_actions_, 0.0));
  switch (options_.rule) {
    case UpdateRule::kForel:
      // softmax(log pi) = pi, so a log-domain seed reproduces the policy.
      for (int i = 0; i < num_agents_; ++i) {
        for (int a = 0; a < num_actions_; ++a) {
          accumulators_[i][a] = std::log(std::max(policy_.dists[i][a], 1e-300));
        }
      }
      break;
    case UpdateRule::kCfr:
      // Positive-part matching over the probabilities themselves.
      for (int i = 0; i < num_agents_; ++i) accumulators_[i] = policy_.dists[i];
      break;
    default:
      break;
  }
}

void Learner::Step(const QTable& q, double value) {
  if (static_cast<int>(q.size()) != num_agents_) {
    throw std::invalid_argument("Learner::Step: Q dimension mismatch");
  }
  ++step_count_;
  for (int i = 0; i < num_agents_; ++i) {
    switch (options_.rule) {
      case UpdateRule::kStepwiseBr:
        policy_.dists[i] = StepStepwiseBr(policy_.dists[i], q[i], options_.lr);
        break;
      case UpdateRule::kForel: {
        const double lr_t =
            options_.forel_base_lr / std::sqrt(static_cast<double>(step_count_));
        policy_.dists[i] = StepForel(accumulators_[i], q[i], lr_t);
        break;
      }
      case UpdateRule::kReplicator:
        policy_.dists[i] =
            StepReplicator(policy_.dists[i], q[i], options_.replicator_dt);
        break;
      case UpdateRule::kMwu:
        policy_.dists[i] = StepMwu(policy_.dists[i], q[i], options_.mwu_k);
        break;
      case UpdateRule::kCfr:
        policy_.dists[i] = StepCfr(accumulators_[i], q[i], value);
        break;
    }
  }
}

std::vector<double> FspMixtureWeights(int64_t t, double eta) {
  if (t < 1) throw std::invalid_argument("FspMixtureWeights: t >= 1");
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("FspMixtureWeights: eta in [0, 1]");
  }
  std::vector<double> weights(t + 1, (1.0 - eta) / static_cast<double>(t));
  weights[0] = eta;
  return weights;
}

std::vector<PreferenceViolation> CheckPreferencePreservation(
    const std::vector<TrajectoryPoint>& trajectory) {
  std::vector<PreferenceViolation> violations;
  if (trajectory.size() < 2) return violations;
  const int n = static_cast<int>(trajectory[0].policy.num_agents());
  const int a = static_cast<int>(trajectory[0].policy.num_actions());
  // dominated[i][x][y]: Q_i(x) >= Q_i(y) has held at every step so far.
  std::vector<std::vector<std::vector<bool>>> holds(
      n, std::vector<std::vector<bool>>(a, std::vector<bool>(a, true)));
  for (size_t t = 0; t + 1 < trajectory.size(); ++t) {
    const QTable& q = trajectory[t].q;
    const auto& cur = trajectory[t].policy.dists;
    const auto& next = trajectory[t + 1].policy.dists;
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < a; ++x) {
        for (int y = 0; y < a; ++y) {
          if (x == y) continue;
          if (q[i][x] < q[i][y]) holds[i][x][y] = false;
          if (!holds[i][x][y]) continue;
          // next(x)/next(y) >= cur(x)/cur(y) by cross-multiplication, with a
          // small absolute slack for accumulated rounding.
          const double lhs = next[i][x] * cur[i][y];
          const double rhs = cur[i][x] * next[i][y];
          if (lhs + 1e-12 < rhs) {
            violations.push_back(PreferenceViolation{
                i, x, y, static_cast<int64_t>(t)});
          }
        }
      }
    }
  }
  return violations;
}

double Theorem1Threshold(const MotivatingParams& params) {
  return 1.0 / (params.team_size + 1.0 + 2.0 * params.bonus + params.eps);
}

}  // namespace crossplay
