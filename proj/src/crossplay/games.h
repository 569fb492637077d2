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

#ifndef CROSSPLAY_GAMES_H_
#define CROSSPLAY_GAMES_H_

#include <array>
#include <string>
#include <vector>

#include "crossplay/game.h"

namespace crossplay {

// --- Team Rock-Paper-Scissors ----------------------------------------------
//
// Two agents per team, two actions each. Both agents picking 0 plays Rock,
// both picking 1 plays Scissors, a split plays Paper. Payoff +1/0/-1 under
// the usual cycle (Rock beats Scissors beats Paper beats Rock). Scissors is
// a strict local NE: a unilateral switch turns the team move into Paper,
// which loses to Scissors; only a joint switch reaches Rock.

enum TeamRpsMove { kRock = 0, kPaper = 1, kScissors = 2 };

TeamGame MakeTeamRps();

// Team-move probabilities (Rock, Paper, Scissors) induced by a mixture.
std::array<double, 3> TeamRpsMoveDistribution(const MixturePolicy& mixture);

// Deterministic product policy realizing a pure team move.
ProductPolicy TeamRpsPureMove(TeamRpsMove move);

// --- Motivating two-action team game ---------------------------------------
//
// N agents per team, actions {0, 1}. All-zeros against all-ones pays the
// bonus C; all-zeros against anything else leaks eps per opposing one;
// otherwise the payoff is the difference of action sums. Unique global NE at
// (all-0, all-0); (all-1, all-1) is a suboptimal local NE.

struct MotivatingParams {
  int team_size = 3;
  double bonus = 1.5;  // C
  double eps = 0.1;
};

TeamGame MakeMotivating(const MotivatingParams& params);

// Closed-form Q_i(0) - Q_i(1) for the motivating game given the other
// agents' action distributions and a product-policy opponent. Serves as the
// analytic oracle against brute-force Q computation.
double MotivatingDeltaQ(const MotivatingParams& params,
                        const std::vector<std::vector<double>>& teammates,
                        const ProductPolicy& opponent);

// --- Seek-attack-defend (SAD) ----------------------------------------------
//
// N agents per team; actions 0..max_seek are seeking actions, followed by
// attack and defend. A team's reward level L is the minimum seeking action
// if all seeking actions pairwise differ by at most one, otherwise zero; the
// seeking reward sums rewards[a] over seeking actions a in [L, L+1]. A team
// with no defender loses its whole reward when the opponent fields two or
// more attackers. Utility is the difference of the two teams' final rewards.

struct SadParams {
  int team_size = 4;
  int max_seek = 4;                       // A; action_count = A + 3
  std::vector<double> rewards = {};       // R_0..R_A; empty means R_x = x

  int action_count() const { return max_seek + 3; }
  int attack_action() const { return max_seek + 1; }
  int defend_action() const { return max_seek + 2; }
  std::vector<double> EffectiveRewards() const;
};

TeamGame MakeSad(const SadParams& params);

struct SadReferencePolicies {
  ProductPolicy seek;    // everyone seeks max_seek
  ProductPolicy attack;  // two attackers, rest seek max_seek
  ProductPolicy defend;  // one defender, rest seek max_seek
  MixturePolicy star;    // (1/4, 1/4, 1/2) over (seek, attack, defend)
};

SadReferencePolicies MakeSadReferencePolicies(const SadParams& params);

// Sum over the three reference policies mu of max(0, U(mu, pi)): the
// reference team's non-negative improvement against pi.
double SadExploitability(const TeamGame& game, const SadParams& params,
                         const MixturePolicy& pi);

// --- Generic matrix loader --------------------------------------------------

// Zero-sum game from a dense row-player utility table (row-major, indexed by
// flattened joint actions). Used for plain N=1 matrices in meta-solver tests.
TeamGame MakeMatrixGame(int team_size, int action_count,
                        std::vector<double> utility, bool symmetric = false);

}  // namespace crossplay

#endif  // CROSSPLAY_GAMES_H_
