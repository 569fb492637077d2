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

#include "crossplay/elo.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossplay {

double EloExpectedScore(double rating_diff) {
  return 1.0 / (1.0 + std::pow(10.0, -rating_diff / 400.0));
}

EloTable FitElo(const std::vector<std::vector<double>>& scores) {
  const int n = static_cast<int>(scores.size());
  if (n < 2) throw std::invalid_argument("FitElo: need at least two agents");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(scores[i].size()) != n) {
      throw std::invalid_argument("FitElo: score matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(scores[i][j] >= 0.0 && scores[i][j] <= 1.0)) {
        throw std::invalid_argument("FitElo: scores must be in [0, 1]");
      }
      if (std::abs(scores[i][j] + scores[j][i] - 1.0) > 1e-9) {
        throw std::invalid_argument("FitElo: scores[i][j] + scores[j][i] "
                                    "must equal one");
      }
    }
  }

  // Gradient ascent on the Bradley-Terry log-likelihood; concave, so a small
  // fixed step converges. Ratings are clamped to keep perfect scores (which
  // have no finite maximizer) from running away.
  std::vector<double> r(n, 0.0);
  const double step = 400.0 / n;
  const double clamp = 4000.0;
  const int max_iters = 200000;
  for (int iter = 0; iter < max_iters; ++iter) {
    double max_grad = 0.0;
    std::vector<double> grad(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        grad[i] += scores[i][j] - EloExpectedScore(r[i] - r[j]);
      }
      max_grad = std::max(max_grad, std::abs(grad[i]));
    }
    if (max_grad < 1e-12) break;
    for (int i = 0; i < n; ++i) {
      r[i] = std::clamp(r[i] + step * grad[i], -clamp, clamp);
    }
  }

  double mean = 0.0;
  for (double v : r) mean += v;
  mean /= n;

  EloTable table;
  table.ratings.resize(n);
  for (int i = 0; i < n; ++i) table.ratings[i] = r[i] - mean + kEloAnchor;
  table.expected_scores.assign(static_cast<size_t>(n) * n, 0.5);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        table.expected_scores[i * n + j] =
            EloExpectedScore(table.ratings[i] - table.ratings[j]);
      }
    }
  }
  return table;
}

std::vector<std::vector<double>> TournamentScores(
    const TeamGame& game, const std::vector<MixturePolicy>& policies) {
  const int n = static_cast<int>(policies.size());
  if (n < 2) {
    throw std::invalid_argument("TournamentScores: need at least two "
                                "policies");
  }
  std::vector<std::vector<double>> scores(n, std::vector<double>(n, 0.5));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const WinProbability wp =
          ComputeWinProbability(game, policies[i], policies[j]);
      scores[i][j] = wp.win + 0.5 * wp.draw;
      scores[j][i] = wp.lose + 0.5 * wp.draw;
    }
  }
  return scores;
}

}  // namespace crossplay
