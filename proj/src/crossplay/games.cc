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
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crossplay {
namespace {

int TeamRpsMoveOf(const JointAction& actions) {
  if (actions[0] == 0 && actions[1] == 0) return kRock;
  if (actions[0] == 1 && actions[1] == 1) return kScissors;
  return kPaper;
}

// move_payoff[a][b]: payoff of move a against move b.
constexpr double kRpsPayoff[3][3] = {
    {0.0, -1.0, 1.0},   // Rock
    {1.0, 0.0, -1.0},   // Paper
    {-1.0, 1.0, 0.0},   // Scissors
};

}  // namespace

TeamGame MakeTeamRps() {
  return TeamGame::FromOracle(
      /*team_size=*/2, /*action_count=*/2,
      [](const JointAction& x, const JointAction& y) {
        return kRpsPayoff[TeamRpsMoveOf(x)][TeamRpsMoveOf(y)];
      },
      /*symmetric=*/true);
}

std::array<double, 3> TeamRpsMoveDistribution(const MixturePolicy& mixture) {
  std::array<double, 3> dist = {0.0, 0.0, 0.0};
  for (int m = 0; m < mixture.num_members(); ++m) {
    const auto& d = mixture.members[m].dists;
    if (d.size() != 2 || d[0].size() != 2) {
      throw std::invalid_argument("TeamRpsMoveDistribution: not a 2x2 policy");
    }
    const double w = mixture.weights[m];
    dist[kRock] += w * d[0][0] * d[1][0];
    dist[kScissors] += w * d[0][1] * d[1][1];
    dist[kPaper] += w * (d[0][0] * d[1][1] + d[0][1] * d[1][0]);
  }
  return dist;
}

ProductPolicy TeamRpsPureMove(TeamRpsMove move) {
  switch (move) {
    case kRock:
      return ProductPolicy::Deterministic({0, 0}, 2);
    case kScissors:
      return ProductPolicy::Deterministic({1, 1}, 2);
    case kPaper:
      return ProductPolicy::Deterministic({0, 1}, 2);
  }
  throw std::invalid_argument("unknown team RPS move");
}

namespace {

void CheckMotivatingParams(const MotivatingParams& p) {
  if (p.team_size < 2) {
    throw std::invalid_argument("motivating game needs team_size >= 2");
  }
  if (!(0.0 < p.eps && p.eps < p.bonus && p.bonus < p.team_size)) {
    throw std::invalid_argument(
        "motivating game requires 0 < eps < C < team_size");
  }
}

}  // namespace

TeamGame MakeMotivating(const MotivatingParams& params) {
  CheckMotivatingParams(params);
  const int n = params.team_size;
  const double c = params.bonus;
  const double eps = params.eps;
  const auto sum = [](const JointAction& v) {
    return std::accumulate(v.begin(), v.end(), 0);
  };
  const auto all_of_value = [n](const JointAction& v, int value) {
    return std::all_of(v.begin(), v.end(),
                       [value](int a) { return a == value; });
  };
  // The displayed cases cover x = all-0 and x, y != all-0; the remaining
  // column (y = all-0) is completed by antisymmetry, exactly.
  return TeamGame::FromOracle(
      n, /*action_count=*/2,
      [=](const JointAction& x, const JointAction& y) -> double {
        if (all_of_value(x, 0)) {
          if (all_of_value(y, 1)) return c;
          return eps * sum(y);
        }
        if (all_of_value(y, 0)) {
          if (all_of_value(x, 1)) return -c;
          return -(eps * sum(x));
        }
        return static_cast<double>(sum(x) - sum(y));
      },
      /*symmetric=*/true);
}

double MotivatingDeltaQ(const MotivatingParams& params,
                        const std::vector<std::vector<double>>& teammates,
                        const ProductPolicy& opponent) {
  CheckMotivatingParams(params);
  const int n = params.team_size;
  if (static_cast<int>(teammates.size()) != n - 1) {
    throw std::invalid_argument("MotivatingDeltaQ: need team_size - 1 "
                                "teammate distributions");
  }
  if (opponent.num_agents() != n || opponent.num_actions() != 2) {
    throw std::invalid_argument("MotivatingDeltaQ: opponent dimension "
                                "mismatch");
  }
  double mates_all_zero = 1.0;
  double mates_all_one = 1.0;
  for (const auto& dist : teammates) {
    if (dist.size() != 2) {
      throw std::invalid_argument("MotivatingDeltaQ: teammate distribution "
                                  "must have two actions");
    }
    mates_all_zero *= dist[0];
    mates_all_one *= dist[1];
  }
  double mu_all_zero = 1.0;
  double mu_all_one = 1.0;
  double mu_ones_mass = 0.0;  // ||mu||_1 = sum_j mu_j(1)
  for (const auto& dist : opponent.dists) {
    mu_all_zero *= dist[0];
    mu_all_one *= dist[1];
    mu_ones_mass += dist[1];
  }
  const double c_term = params.bonus - n * params.eps;
  return mu_all_zero * (1.0 + params.eps) +
         mates_all_zero * mu_ones_mass * (1.0 + params.eps) +
         (mates_all_zero * mu_all_one + mates_all_one * mu_all_zero) * c_term -
         1.0;
}

std::vector<double> SadParams::EffectiveRewards() const {
  if (!rewards.empty()) return rewards;
  std::vector<double> r(max_seek + 1);
  for (int x = 0; x <= max_seek; ++x) r[x] = x;
  return r;
}

namespace {

void CheckSadParams(const SadParams& p) {
  if (p.team_size < 1) throw std::invalid_argument("SAD: team_size >= 1");
  if (p.max_seek < 1) throw std::invalid_argument("SAD: max_seek >= 1");
  const std::vector<double> r = p.EffectiveRewards();
  if (static_cast<int>(r.size()) != p.max_seek + 1) {
    throw std::invalid_argument("SAD: rewards must have max_seek + 1 entries");
  }
  if (r[0] != 0.0) throw std::invalid_argument("SAD: R_0 must be zero");
  for (int x = 0; x + 1 <= p.max_seek; ++x) {
    if (!(r[x] < r[x + 1])) {
      throw std::invalid_argument("SAD: rewards must be strictly increasing");
    }
  }
}

struct SadTeamStats {
  double seek_reward = 0.0;  // R-hat
  bool has_defender = false;
  bool double_attack = false;  // two or more attackers
};

SadTeamStats ComputeSadTeamStats(const SadParams& params,
                                 const std::vector<double>& rewards,
                                 const JointAction& actions) {
  SadTeamStats stats;
  int attackers = 0;
  int min_seek = params.max_seek + 1;
  int max_seek_seen = -1;
  for (int a : actions) {
    if (a == params.attack_action()) {
      ++attackers;
    } else if (a == params.defend_action()) {
      stats.has_defender = true;
    } else {
      min_seek = std::min(min_seek, a);
      max_seek_seen = std::max(max_seek_seen, a);
    }
  }
  stats.double_attack = attackers >= 2;
  if (max_seek_seen < 0) return stats;  // no seekers: no seeking reward
  // Reward level: the minimum seeking action when all seeking actions
  // pairwise differ by at most one, otherwise zero.
  const int level = (max_seek_seen - min_seek <= 1) ? min_seek : 0;
  for (int a : actions) {
    if (a <= params.max_seek && a >= level && a <= level + 1) {
      stats.seek_reward += rewards[a];
    }
  }
  return stats;
}

}  // namespace

TeamGame MakeSad(const SadParams& params) {
  CheckSadParams(params);
  const std::vector<double> rewards = params.EffectiveRewards();
  const int rank = 4;
  // U(x, y) = Rhat(x) * (1 - noDef(x) * atk2(y)) - Rhat(y) * (1 - noDef(y) *
  // atk2(x)) factors into rank-4 bilinear features per team.
  const int64_t joints = [&] {
    int64_t j = 1;
    for (int i = 0; i < params.team_size; ++i) j *= params.action_count();
    return j;
  }();
  std::vector<double> row_features(joints * rank);
  std::vector<double> col_features(joints * rank);
  JointAction digits(params.team_size, 0);
  for (int64_t x = 0; x < joints; ++x) {
    const SadTeamStats s = ComputeSadTeamStats(params, rewards, digits);
    const double undefended = s.has_defender ? 0.0 : 1.0;
    const double atk2 = s.double_attack ? 1.0 : 0.0;
    double* f = &row_features[x * rank];
    f[0] = s.seek_reward;
    f[1] = s.seek_reward * undefended;
    f[2] = 1.0;
    f[3] = atk2;
    double* g = &col_features[x * rank];
    g[0] = 1.0;
    g[1] = -atk2;
    g[2] = -s.seek_reward;
    g[3] = s.seek_reward * undefended;
    for (int i = params.team_size - 1; i >= 0; --i) {
      if (++digits[i] < params.action_count()) break;
      digits[i] = 0;
    }
  }
  return TeamGame::FromBilinear(params.team_size, params.action_count(), rank,
                                std::move(row_features),
                                std::move(col_features),
                                /*symmetric=*/true);
}

SadReferencePolicies MakeSadReferencePolicies(const SadParams& params) {
  CheckSadParams(params);
  if (params.team_size < 3) {
    throw std::invalid_argument("SAD reference policies need team_size >= 3");
  }
  const int n = params.team_size;
  const int a = params.action_count();
  JointAction seek(n, params.max_seek);
  JointAction attack = seek;
  attack[0] = params.attack_action();
  attack[1] = params.attack_action();
  JointAction defend = seek;
  defend[0] = params.defend_action();

  SadReferencePolicies refs;
  refs.seek = ProductPolicy::Deterministic(seek, a);
  refs.attack = ProductPolicy::Deterministic(attack, a);
  refs.defend = ProductPolicy::Deterministic(defend, a);
  refs.star.members = {refs.seek, refs.attack, refs.defend};
  refs.star.weights = {0.25, 0.25, 0.5};
  return refs;
}

double SadExploitability(const TeamGame& game, const SadParams& params,
                         const MixturePolicy& pi) {
  const SadReferencePolicies refs = MakeSadReferencePolicies(params);
  const std::vector<double> g = game.ColFeatureExpectation(pi);
  double total = 0.0;
  for (const ProductPolicy* ref : {&refs.seek, &refs.attack, &refs.defend}) {
    const std::vector<double> f = game.RowFeatureExpectation(*ref);
    double u = 0.0;
    for (int k = 0; k < game.rank(); ++k) u += f[k] * g[k];
    total += std::max(0.0, u);
  }
  return total;
}

TeamGame MakeMatrixGame(int team_size, int action_count,
                        std::vector<double> utility, bool symmetric) {
  return TeamGame::FromTable(team_size, action_count, std::move(utility),
                             symmetric);
}

}  // namespace crossplay
