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

#ifndef CROSSPLAY_GAME_H_
#define CROSSPLAY_GAME_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace crossplay {

// One pure joint strategy of a team: an action index per agent.
using JointAction = std::vector<int>;

inline constexpr double kSimplexTol = 1e-9;

// A team strategy factored into independent per-agent categorical
// distributions.
struct ProductPolicy {
  // dists[agent][action], each row a distribution over the agent's actions.
  std::vector<std::vector<double>> dists;

  int num_agents() const { return static_cast<int>(dists.size()); }
  int num_actions() const {
    return dists.empty() ? 0 : static_cast<int>(dists[0].size());
  }

  static ProductPolicy Uniform(int num_agents, int num_actions);
  static ProductPolicy Deterministic(const JointAction& actions,
                                     int num_actions);
};

// A weighted population of product policies; the object meta-solvers produce
// and best responses are computed against.
struct MixturePolicy {
  std::vector<ProductPolicy> members;
  std::vector<double> weights;

  int num_members() const { return static_cast<int>(members.size()); }

  static MixturePolicy Single(ProductPolicy policy);
  static MixturePolicy UniformOver(std::vector<ProductPolicy> policies);
};

// A two-team zero-sum normal-form game with homogeneous action sets. The
// joint utility U(x, y) is team one's payoff and is stored in a factored
// bilinear form U(x, y) = f(x) . g(y), where f and g are per-team feature
// vectors indexed by flattened joint action. Dense games use rank = J with
// one-hot row features, which is just the full utility table; structured
// games (see games.h) supply low-rank features so that expected utilities,
// Q-functions, and team best responses stay exact while avoiding the
// J^2 pairwise enumeration.
class TeamGame {
 public:
  using UtilityFn =
      std::function<double(const JointAction&, const JointAction&)>;

  // Builds the dense table representation by evaluating `utility` on all
  // joint-action pairs.
  static TeamGame FromOracle(int team_size, int action_count,
                             UtilityFn utility, bool symmetric);

  // Dense table, row-major: table[x * J + y] = U(x, y).
  static TeamGame FromTable(int team_size, int action_count,
                            std::vector<double> table, bool symmetric);

  // Low-rank factored utility: U(x, y) = sum_k row[x*rank+k] * col[y*rank+k].
  static TeamGame FromBilinear(int team_size, int action_count, int rank,
                               std::vector<double> row_features,
                               std::vector<double> col_features,
                               bool symmetric);

  int team_size() const { return team_size_; }
  int action_count() const { return action_count_; }
  bool symmetric() const { return symmetric_; }
  int64_t num_joints() const { return num_joints_; }
  int rank() const { return rank_; }

  // Exact utility of a pure joint-action pair.
  double utility(const JointAction& x, const JointAction& y) const;
  double utility_by_index(int64_t x, int64_t y) const;

  int64_t JointToIndex(const JointAction& actions) const;
  JointAction IndexToJoint(int64_t index) const;

  // Expected column-side features E_{y ~ col}[g(y)]; the per-policy building
  // block for every expected-utility computation.
  std::vector<double> ColFeatureExpectation(const ProductPolicy& col) const;
  std::vector<double> ColFeatureExpectation(const MixturePolicy& col) const;
  std::vector<double> RowFeatureExpectation(const ProductPolicy& row) const;
  std::vector<double> RowFeatureExpectation(const MixturePolicy& row) const;

  // values[x] = E_{y ~ col}[U(x, y)] given aggregated column features.
  std::vector<double> RowValues(std::span<const double> col_features) const;
  // values[y] = E_{x ~ row}[-U(x, y)]: the column team's expected payoff.
  std::vector<double> ColValues(std::span<const double> row_features) const;

  // Probability of each flattened joint action under a mixture.
  std::vector<double> JointDistribution(const MixturePolicy& mixture) const;

  void ValidatePolicy(const ProductPolicy& policy) const;
  void ValidatePolicy(const MixturePolicy& mixture) const;

 private:
  TeamGame(int team_size, int action_count, int rank, bool symmetric);

  int team_size_;
  int action_count_;
  int rank_;
  bool symmetric_;
  int64_t num_joints_;
  std::vector<double> row_features_;  // [joint * rank + k]
  std::vector<double> col_features_;  // [joint * rank + k]
};

// Exact expected utility of the row mixture against the column mixture,
// by full enumeration (through the factored form).
double ExpectedUtility(const TeamGame& game, const MixturePolicy& row,
                       const MixturePolicy& col);
double ExpectedUtility(const TeamGame& game, const ProductPolicy& row,
                       const ProductPolicy& col);

struct BestResponse {
  JointAction action;
  double value = 0.0;
};

// Joint pure strategy maximizing expected utility against the opponent
// mixture (opponent plays the column side). Ties break toward the lowest
// lexicographic joint action.
BestResponse TeamBestResponse(const TeamGame& game,
                              const MixturePolicy& opponent);

// e(row, col) = max_x U(x, col) + max_y -U(row, y). Non-negative, and zero
// exactly at a global NE of the full game.
double TeamExploitability(const TeamGame& game, const MixturePolicy& row,
                          const MixturePolicy& col);
// Symmetric-game convenience: the same mixture fills both roles.
double TeamExploitability(const TeamGame& game, const MixturePolicy& sigma);

struct WinProbability {
  double win = 0.0;
  double draw = 0.0;
  double lose = 0.0;
};

// Exact joint outcome distribution for the row mixture vs the column
// mixture: win iff U(x, y) > 0, draw iff U(x, y) == 0.
WinProbability ComputeWinProbability(const TeamGame& game,
                                     const MixturePolicy& row,
                                     const MixturePolicy& col);

}  // namespace crossplay

#endif  // CROSSPLAY_GAME_H_
