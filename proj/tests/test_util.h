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

// Brute-force oracles kept deliberately independent of the library's
// factored fast paths: probabilities are multiplied out per joint action and
// utilities come either from the game's pairwise oracle or, for SAD, from a
// from-the-rules reimplementation.

#ifndef CROSSPLAY_TESTS_TEST_UTIL_H_
#define CROSSPLAY_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <random>
#include <vector>

#include "crossplay/game.h"
#include "crossplay/games.h"

namespace crossplay::test {

inline double JointProb(const ProductPolicy& policy, const JointAction& x) {
  double p = 1.0;
  for (size_t i = 0; i < x.size(); ++i) p *= policy.dists[i][x[i]];
  return p;
}

inline double NaiveExpectedUtility(const TeamGame& game,
                                   const MixturePolicy& row,
                                   const MixturePolicy& col) {
  double total = 0.0;
  for (int mr = 0; mr < row.num_members(); ++mr) {
    for (int mc = 0; mc < col.num_members(); ++mc) {
      double pair_total = 0.0;
      for (int64_t xi = 0; xi < game.num_joints(); ++xi) {
        const JointAction x = game.IndexToJoint(xi);
        const double px = JointProb(row.members[mr], x);
        if (px == 0.0) continue;
        for (int64_t yi = 0; yi < game.num_joints(); ++yi) {
          const JointAction y = game.IndexToJoint(yi);
          const double py = JointProb(col.members[mc], y);
          if (py == 0.0) continue;
          pair_total += px * py * game.utility(x, y);
        }
      }
      total += row.weights[mr] * col.weights[mc] * pair_total;
    }
  }
  return total;
}

// Q_i(a) by direct triple enumeration: teammates' joints x opponent mixture.
inline std::vector<std::vector<double>> NaiveQ(const TeamGame& game,
                                               const ProductPolicy& pi,
                                               const MixturePolicy& mu) {
  const int n = game.team_size();
  const int a = game.action_count();
  std::vector<std::vector<double>> q(n, std::vector<double>(a, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int action = 0; action < a; ++action) {
      double value = 0.0;
      for (int64_t xi = 0; xi < game.num_joints(); ++xi) {
        JointAction x = game.IndexToJoint(xi);
        if (x[i] != action) continue;
        double px = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j != i) px *= pi.dists[j][x[j]];
        }
        if (px == 0.0) continue;
        for (int m = 0; m < mu.num_members(); ++m) {
          for (int64_t yi = 0; yi < game.num_joints(); ++yi) {
            const JointAction y = game.IndexToJoint(yi);
            const double py =
                mu.weights[m] * JointProb(mu.members[m], y);
            if (py == 0.0) continue;
            value += px * py * game.utility(x, y);
          }
        }
      }
      q[i][action] = value;
    }
  }
  return q;
}

// SAD utility straight from the rules, with no shared code paths.
inline double SadRuleUtility(const SadParams& params, const JointAction& x,
                             const JointAction& y) {
  const std::vector<double> rewards = params.EffectiveRewards();
  const auto team_reward = [&](const JointAction& own,
                               const JointAction& other) {
    std::vector<int> seeks;
    bool defender = false;
    for (int action : own) {
      if (action == params.attack_action()) continue;
      if (action == params.defend_action()) {
        defender = true;
        continue;
      }
      seeks.push_back(action);
    }
    double seek_reward = 0.0;
    if (!seeks.empty()) {
      const auto [lo, hi] = std::minmax_element(seeks.begin(), seeks.end());
      const int level = (*hi - *lo <= 1) ? *lo : 0;
      for (int action : seeks) {
        if (action >= level && action <= level + 1) {
          seek_reward += rewards[action];
        }
      }
    }
    int opponent_attackers = 0;
    for (int action : other) {
      if (action == params.attack_action()) ++opponent_attackers;
    }
    if (!defender && opponent_attackers >= 2) return 0.0;
    return seek_reward;
  };
  return team_reward(x, y) - team_reward(y, x);
}

inline ProductPolicy RandomProductPolicy(const TeamGame& game,
                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProductPolicy policy;
  policy.dists.assign(game.team_size(),
                      std::vector<double>(game.action_count(), 0.0));
  for (auto& dist : policy.dists) {
    double sum = 0.0;
    for (double& v : dist) {
      v = unit(rng) + 1e-6;
      sum += v;
    }
    for (double& v : dist) v /= sum;
  }
  return policy;
}

inline MixturePolicy RandomMixture(const TeamGame& game, std::mt19937_64& rng,
                                   int max_members = 3) {
  std::uniform_int_distribution<int> size(1, max_members);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MixturePolicy mixture;
  const int members = size(rng);
  double sum = 0.0;
  for (int m = 0; m < members; ++m) {
    mixture.members.push_back(RandomProductPolicy(game, rng));
    mixture.weights.push_back(unit(rng) + 1e-6);
    sum += mixture.weights.back();
  }
  for (double& w : mixture.weights) w /= sum;
  return mixture;
}

inline JointAction RandomJoint(const TeamGame& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> action(0, game.action_count() - 1);
  JointAction joint(game.team_size());
  for (int& a : joint) a = action(rng);
  return joint;
}

}  // namespace crossplay::test

#endif  // CROSSPLAY_TESTS_TEST_UTIL_H_
