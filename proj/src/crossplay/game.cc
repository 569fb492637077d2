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

#include "crossplay/game.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace crossplay {
namespace {

int64_t IntPow(int64_t base, int exp) {
  int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > (int64_t{1} << 40) / std::max<int64_t>(base, 1)) {
      throw std::invalid_argument("joint action space too large to enumerate");
    }
    result *= base;
  }
  return result;
}

void CheckDistribution(const std::vector<double>& dist, int expected_size,
                       const char* what) {
  if (static_cast<int>(dist.size()) != expected_size) {
    throw std::invalid_argument(std::string(what) + ": wrong action count");
  }
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(std::string(what) +
                                  ": negative or non-finite probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw std::invalid_argument(std::string(what) +
                                ": probabilities do not sum to one");
  }
}

}  // namespace

ProductPolicy ProductPolicy::Uniform(int num_agents, int num_actions) {
  ProductPolicy policy;
  policy.dists.assign(num_agents,
                      std::vector<double>(num_actions, 1.0 / num_actions));
  return policy;
}

ProductPolicy ProductPolicy::Deterministic(const JointAction& actions,
                                           int num_actions) {
  ProductPolicy policy;
  policy.dists.assign(actions.size(), std::vector<double>(num_actions, 0.0));
  for (size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= num_actions) {
      throw std::invalid_argument("Deterministic: action index out of range");
    }
    policy.dists[i][actions[i]] = 1.0;
  }
  return policy;
}

MixturePolicy MixturePolicy::Single(ProductPolicy policy) {
  MixturePolicy mixture;
  mixture.members.push_back(std::move(policy));
  mixture.weights.push_back(1.0);
  return mixture;
}

MixturePolicy MixturePolicy::UniformOver(std::vector<ProductPolicy> policies) {
  if (policies.empty()) {
    throw std::invalid_argument("UniformOver: empty population");
  }
  MixturePolicy mixture;
  mixture.weights.assign(policies.size(), 1.0 / policies.size());
  mixture.members = std::move(policies);
  return mixture;
}

TeamGame::TeamGame(int team_size, int action_count, int rank, bool symmetric)
    : team_size_(team_size),
      action_count_(action_count),
      rank_(rank),
      symmetric_(symmetric) {
  if (team_size < 1) throw std::invalid_argument("team_size must be positive");
  if (action_count < 1) {
    throw std::invalid_argument("action_count must be positive");
  }
  num_joints_ = IntPow(action_count, team_size);
}

TeamGame TeamGame::FromTable(int team_size, int action_count,
                             std::vector<double> table, bool symmetric) {
  TeamGame game(team_size, action_count, 0, symmetric);
  const int64_t n = game.num_joints_;
  if (static_cast<int64_t>(table.size()) != n * n) {
    throw std::invalid_argument("FromTable: table size mismatch");
  }
  for (double u : table) {
    if (!std::isfinite(u)) {
      throw std::invalid_argument("FromTable: non-finite utility");
    }
  }
  // One-hot row features select the row of the table held in col features.
  game.rank_ = static_cast<int>(n);
  game.row_features_.assign(n * n, 0.0);
  for (int64_t x = 0; x < n; ++x) game.row_features_[x * n + x] = 1.0;
  game.col_features_.assign(n * n, 0.0);
  for (int64_t y = 0; y < n; ++y) {
    for (int64_t k = 0; k < n; ++k) {
      game.col_features_[y * n + k] = table[k * n + y];
    }
  }
  return game;
}

TeamGame TeamGame::FromOracle(int team_size, int action_count,
                              UtilityFn utility, bool symmetric) {
  TeamGame probe(team_size, action_count, 0, symmetric);
  const int64_t n = probe.num_joints_;
  std::vector<double> table(n * n);
  for (int64_t x = 0; x < n; ++x) {
    const JointAction ax = probe.IndexToJoint(x);
    for (int64_t y = 0; y < n; ++y) {
      table[x * n + y] = utility(ax, probe.IndexToJoint(y));
    }
  }
  return FromTable(team_size, action_count, std::move(table), symmetric);
}

TeamGame TeamGame::FromBilinear(int team_size, int action_count, int rank,
                                std::vector<double> row_features,
                                std::vector<double> col_features,
                                bool symmetric) {
  TeamGame game(team_size, action_count, rank, symmetric);
  if (rank < 1) throw std::invalid_argument("FromBilinear: rank must be >= 1");
  const int64_t expected = game.num_joints_ * rank;
  if (static_cast<int64_t>(row_features.size()) != expected ||
      static_cast<int64_t>(col_features.size()) != expected) {
    throw std::invalid_argument("FromBilinear: feature size mismatch");
  }
  game.row_features_ = std::move(row_features);
  game.col_features_ = std::move(col_features);
  return game;
}

double TeamGame::utility_by_index(int64_t x, int64_t y) const {
  const double* f = &row_features_[x * rank_];
  const double* g = &col_features_[y * rank_];
  double sum = 0.0;
  for (int k = 0; k < rank_; ++k) sum += f[k] * g[k];
  return sum;
}

double TeamGame::utility(const JointAction& x, const JointAction& y) const {
  return utility_by_index(JointToIndex(x), JointToIndex(y));
}

int64_t TeamGame::JointToIndex(const JointAction& actions) const {
  if (static_cast<int>(actions.size()) != team_size_) {
    throw std::invalid_argument("joint action has wrong length");
  }
  int64_t index = 0;
  for (int a : actions) {
    if (a < 0 || a >= action_count_) {
      throw std::invalid_argument("joint action index out of range");
    }
    index = index * action_count_ + a;
  }
  return index;
}

JointAction TeamGame::IndexToJoint(int64_t index) const {
  JointAction actions(team_size_);
  for (int i = team_size_ - 1; i >= 0; --i) {
    actions[i] = static_cast<int>(index % action_count_);
    index /= action_count_;
  }
  return actions;
}

void TeamGame::ValidatePolicy(const ProductPolicy& policy) const {
  if (policy.num_agents() != team_size_) {
    throw std::invalid_argument("policy has wrong number of agents");
  }
  for (const auto& dist : policy.dists) {
    CheckDistribution(dist, action_count_, "agent policy");
  }
}

void TeamGame::ValidatePolicy(const MixturePolicy& mixture) const {
  if (mixture.members.empty()) {
    throw std::invalid_argument("mixture has no members");
  }
  if (mixture.members.size() != mixture.weights.size()) {
    throw std::invalid_argument("mixture weights/members length mismatch");
  }
  CheckDistribution(mixture.weights,
                    static_cast<int>(mixture.weights.size()),
                    "mixture weights");
  for (const auto& member : mixture.members) ValidatePolicy(member);
}

namespace {

// Accumulates weight * E_{x ~ policy}[features(x)] into `out` by enumerating
// joint actions with an odometer, carrying the product probability.
void AccumulateFeatureExpectation(const TeamGame& game,
                                  const std::vector<double>& features,
                                  const ProductPolicy& policy, double weight,
                                  std::vector<double>& out) {
  const int n = game.team_size();
  const int a = game.action_count();
  const int rank = game.rank();
  JointAction digits(n, 0);
  // prefix[i] = probability of digits[0..i-1].
  std::vector<double> prefix(n + 1, 1.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * policy.dists[i][0];
  const int64_t joints = game.num_joints();
  for (int64_t x = 0; x < joints; ++x) {
    const double p = weight * prefix[n];
    if (p != 0.0) {
      const double* f = &features[x * rank];
      for (int k = 0; k < rank; ++k) out[k] += p * f[k];
    }
    // Advance the odometer (least significant digit = last agent).
    int i = n - 1;
    while (i >= 0) {
      if (++digits[i] < a) break;
      digits[i] = 0;
      --i;
    }
    if (i < 0) break;
    for (int j = i; j < n; ++j) {
      prefix[j + 1] = prefix[j] * policy.dists[j][digits[j]];
    }
  }
}

}  // namespace

std::vector<double> TeamGame::ColFeatureExpectation(
    const ProductPolicy& col) const {
  ValidatePolicy(col);
  std::vector<double> out(rank_, 0.0);
  AccumulateFeatureExpectation(*this, col_features_, col, 1.0, out);
  return out;
}

std::vector<double> TeamGame::ColFeatureExpectation(
    const MixturePolicy& col) const {
  ValidatePolicy(col);
  std::vector<double> out(rank_, 0.0);
  for (int m = 0; m < col.num_members(); ++m) {
    AccumulateFeatureExpectation(*this, col_features_, col.members[m],
                                 col.weights[m], out);
  }
  return out;
}

std::vector<double> TeamGame::RowFeatureExpectation(
    const ProductPolicy& row) const {
  ValidatePolicy(row);
  std::vector<double> out(rank_, 0.0);
  AccumulateFeatureExpectation(*this, row_features_, row, 1.0, out);
  return out;
}

std::vector<double> TeamGame::RowFeatureExpectation(
    const MixturePolicy& row) const {
  ValidatePolicy(row);
  std::vector<double> out(rank_, 0.0);
  for (int m = 0; m < row.num_members(); ++m) {
    AccumulateFeatureExpectation(*this, row_features_, row.members[m],
                                 row.weights[m], out);
  }
  return out;
}

std::vector<double> TeamGame::RowValues(
    std::span<const double> col_features) const {
  if (static_cast<int>(col_features.size()) != rank_) {
    throw std::invalid_argument("RowValues: feature rank mismatch");
  }
  std::vector<double> values(num_joints_);
  for (int64_t x = 0; x < num_joints_; ++x) {
    const double* f = &row_features_[x * rank_];
    double sum = 0.0;
    for (int k = 0; k < rank_; ++k) sum += f[k] * col_features[k];
    values[x] = sum;
  }
  return values;
}

std::vector<double> TeamGame::ColValues(
    std::span<const double> row_features) const {
  if (static_cast<int>(row_features.size()) != rank_) {
    throw std::invalid_argument("ColValues: feature rank mismatch");
  }
  std::vector<double> values(num_joints_);
  for (int64_t y = 0; y < num_joints_; ++y) {
    const double* g = &col_features_[y * rank_];
    double sum = 0.0;
    for (int k = 0; k < rank_; ++k) sum += g[k] * row_features[k];
    values[y] = -sum;
  }
  return values;
}

std::vector<double> TeamGame::JointDistribution(
    const MixturePolicy& mixture) const {
  ValidatePolicy(mixture);
  std::vector<double> probs(num_joints_, 0.0);
  const int n = team_size_;
  const int a = action_count_;
  for (int m = 0; m < mixture.num_members(); ++m) {
    const ProductPolicy& policy = mixture.members[m];
    const double w = mixture.weights[m];
    JointAction digits(n, 0);
    std::vector<double> prefix(n + 1, 1.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * policy.dists[i][0];
    for (int64_t x = 0; x < num_joints_; ++x) {
      probs[x] += w * prefix[n];
      int i = n - 1;
      while (i >= 0) {
        if (++digits[i] < a) break;
        digits[i] = 0;
        --i;
      }
      if (i < 0) break;
      for (int j = i; j < n; ++j) {
        prefix[j + 1] = prefix[j] * policy.dists[j][digits[j]];
      }
    }
  }
  return probs;
}

double ExpectedUtility(const TeamGame& game, const MixturePolicy& row,
                       const MixturePolicy& col) {
  const std::vector<double> f = game.RowFeatureExpectation(row);
  const std::vector<double> g = game.ColFeatureExpectation(col);
  double sum = 0.0;
  for (int k = 0; k < game.rank(); ++k) sum += f[k] * g[k];
  return sum;
}

double ExpectedUtility(const TeamGame& game, const ProductPolicy& row,
                       const ProductPolicy& col) {
  const std::vector<double> f = game.RowFeatureExpectation(row);
  const std::vector<double> g = game.ColFeatureExpectation(col);
  double sum = 0.0;
  for (int k = 0; k < game.rank(); ++k) sum += f[k] * g[k];
  return sum;
}

BestResponse TeamBestResponse(const TeamGame& game,
                              const MixturePolicy& opponent) {
  const std::vector<double> values =
      game.RowValues(game.ColFeatureExpectation(opponent));
  int64_t best = 0;
  for (int64_t x = 1; x < game.num_joints(); ++x) {
    if (values[x] > values[best]) best = x;
  }
  return BestResponse{game.IndexToJoint(best), values[best]};
}

double TeamExploitability(const TeamGame& game, const MixturePolicy& row,
                          const MixturePolicy& col) {
  const std::vector<double> row_gain =
      game.RowValues(game.ColFeatureExpectation(col));
  const std::vector<double> col_gain =
      game.ColValues(game.RowFeatureExpectation(row));
  return *std::max_element(row_gain.begin(), row_gain.end()) +
         *std::max_element(col_gain.begin(), col_gain.end());
}

double TeamExploitability(const TeamGame& game, const MixturePolicy& sigma) {
  return TeamExploitability(game, sigma, sigma);
}

WinProbability ComputeWinProbability(const TeamGame& game,
                                     const MixturePolicy& row,
                                     const MixturePolicy& col) {
  const std::vector<double> p = game.JointDistribution(row);
  const std::vector<double> q = game.JointDistribution(col);
  WinProbability result;
  for (int64_t x = 0; x < game.num_joints(); ++x) {
    if (p[x] == 0.0) continue;
    for (int64_t y = 0; y < game.num_joints(); ++y) {
      const double mass = p[x] * q[y];
      if (mass == 0.0) continue;
      const double u = game.utility_by_index(x, y);
      if (u > 0.0) {
        result.win += mass;
      } else if (u < 0.0) {
        result.lose += mass;
      } else {
        result.draw += mass;
      }
    }
  }
  return result;
}

}  // namespace crossplay
