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

#ifndef CROSSPLAY_META_H_
#define CROSSPLAY_META_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "crossplay/game.h"

namespace crossplay {

// Weights over a population; non-negative, summing to one.
using MetaPolicy = std::vector<double>;

// Exact expected utilities between two populations, row player's payoff.
struct PayoffTable {
  int rows = 0;
  int cols = 0;
  std::vector<double> matrix;  // row-major

  double at(int r, int c) const { return matrix[r * cols + c]; }
  double& at(int r, int c) { return matrix[r * cols + c]; }
};

PayoffTable FillPayoffs(const TeamGame& game,
                        const std::vector<ProductPolicy>& row_population,
                        const std::vector<ProductPolicy>& col_population);

// Incremental fill: keeps existing entries bit-for-bit and computes only the
// rows/columns for newly appended policies. The populations must extend the
// ones the table was built from.
void ExtendPayoffs(const TeamGame& game, PayoffTable& table,
                   const std::vector<ProductPolicy>& row_population,
                   const std::vector<ProductPolicy>& col_population);

MetaPolicy SolveUniform(int population_size);

struct NashResult {
  MetaPolicy row;
  MetaPolicy col;
  double value = 0.0;        // row strategy's expected payoff
  double certificate = 0.0;  // max row gain + max col gain over pure deviations
};

class MetaSolverError : public std::runtime_error {
 public:
  MetaSolverError(const std::string& message, double best_certificate)
      : std::runtime_error(message), best_certificate(best_certificate) {}
  double best_certificate;
};

// Restricted-game exploitability of a strategy pair: the sum of both sides'
// best pure-deviation gains. This is the certificate the solver contract is
// stated in.
double RestrictedExploitability(const PayoffTable& table, const MetaPolicy& row,
                                const MetaPolicy& col);

// Approximate Nash equilibrium of a two-player zero-sum table by iterative
// no-regret self-play (regret matching+ with alternation and linear
// averaging), certified by exhaustive pure-deviation scan. Throws
// MetaSolverError if the certificate does not reach `tol` within the
// iteration budget.
NashResult SolveNashZeroSum(const PayoffTable& table, double tol = 1e-6,
                            int64_t max_iters = 4'000'000);

// For a symmetric joint table, a single meta-policy serving both roles:
// the average of the solved row and column strategies, re-certified.
MetaPolicy SolveNashSymmetric(const PayoffTable& table, double tol = 1e-6,
                              int64_t max_iters = 4'000'000);

// Opponent-sampling scores. Weights are proportional to the score, with a
// uniform fallback when every score is zero.
//
// Main-policy sampling weights the opponents by their win rate against the
// current policy; counter-policy sampling by win rate times lose rate, which
// favors opponents of roughly equal strength.
MetaPolicy PrioritizedScoresMain(const TeamGame& game,
                                 const ProductPolicy& current,
                                 const std::vector<ProductPolicy>& population);
MetaPolicy PrioritizedScoresCounter(
    const TeamGame& game, const ProductPolicy& current,
    const std::vector<ProductPolicy>& population);

}  // namespace crossplay

#endif  // CROSSPLAY_META_H_
