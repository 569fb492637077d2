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

#ifndef CROSSPLAY_ELO_H_
#define CROSSPLAY_ELO_H_

#include <vector>

#include "crossplay/game.h"

namespace crossplay {

// Ratings on the usual logistic scale: a 100-point gap predicts an expected
// score of about 0.64, a 200-point gap about 0.76.
struct EloTable {
  std::vector<double> ratings;          // mean-anchored at 1500
  std::vector<double> expected_scores;  // fitted pairwise matrix, row-major
};

inline constexpr double kEloAnchor = 1500.0;

double EloExpectedScore(double rating_diff);

// Maximum-likelihood Bradley-Terry fit of ratings to an exact pairwise score
// matrix (scores[i][j] in [0, 1] with scores[i][j] + scores[j][i] = 1).
// Exact scores make the fit order-independent; when the scores are
// Bradley-Terry consistent the fitted matrix reproduces them.
EloTable FitElo(const std::vector<std::vector<double>>& scores);

// Pairwise expected scores of policies in a game: win + draw / 2, exact.
std::vector<std::vector<double>> TournamentScores(
    const TeamGame& game, const std::vector<MixturePolicy>& policies);

}  // namespace crossplay

#endif  // CROSSPLAY_ELO_H_
