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

#include "crossplay/meta.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace crossplay {

PayoffTable FillPayoffs(const TeamGame& game,
                        const std::vector<ProductPolicy>& row_population,
                        const std::vector<ProductPolicy>& col_population) {
  if (row_population.empty() || col_population.empty()) {
    throw std::invalid_argument("FillPayoffs: populations must be non-empty");
  }
  PayoffTable table;
  table.rows = 0;
  table.cols = 0;
  ExtendPayoffs(game, table, row_population, col_population);
  return table;
}

void ExtendPayoffs(const TeamGame& game, PayoffTable& table,
                   const std::vector<ProductPolicy>& row_population,
                   const std::vector<ProductPolicy>& col_population) {
  const int new_rows = static_cast<int>(row_population.size());
  const int new_cols = static_cast<int>(col_population.size());
  if (new_rows < table.rows || new_cols < table.cols) {
    throw std::invalid_argument("ExtendPayoffs: populations shrank");
  }
  std::vector<double> grown(static_cast<size_t>(new_rows) * new_cols, 0.0);
  for (int r = 0; r < table.rows; ++r) {
    for (int c = 0; c < table.cols; ++c) {
      grown[r * new_cols + c] = table.at(r, c);
    }
  }
  // Entries are dot products of cached per-policy feature expectations, so an
  // entry computed incrementally is bit-identical to a full recomputation.
  std::vector<std::vector<double>> row_feats(new_rows);
  std::vector<std::vector<double>> col_feats(new_cols);
  for (int r = 0; r < new_rows; ++r) {
    row_feats[r] = game.RowFeatureExpectation(row_population[r]);
  }
  for (int c = 0; c < new_cols; ++c) {
    col_feats[c] = game.ColFeatureExpectation(col_population[c]);
  }
  for (int r = 0; r < new_rows; ++r) {
    for (int c = 0; c < new_cols; ++c) {
      if (r < table.rows && c < table.cols) continue;
      double sum = 0.0;
      for (int k = 0; k < game.rank(); ++k) {
        sum += row_feats[r][k] * col_feats[c][k];
      }
      grown[r * new_cols + c] = sum;
    }
  }
  table.rows = new_rows;
  table.cols = new_cols;
  table.matrix = std::move(grown);
}

MetaPolicy SolveUniform(int population_size) {
  if (population_size < 1) {
    throw std::invalid_argument("SolveUniform: empty population");
  }
  return MetaPolicy(population_size, 1.0 / population_size);
}

double RestrictedExploitability(const PayoffTable& table, const MetaPolicy& row,
                                const MetaPolicy& col) {
  if (static_cast<int>(row.size()) != table.rows ||
      static_cast<int>(col.size()) != table.cols) {
    throw std::invalid_argument("RestrictedExploitability: size mismatch");
  }
  double value = 0.0;
  for (int r = 0; r < table.rows; ++r) {
    for (int c = 0; c < table.cols; ++c) {
      value += row[r] * col[c] * table.at(r, c);
    }
  }
  double best_row = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < table.rows; ++r) {
    double payoff = 0.0;
    for (int c = 0; c < table.cols; ++c) payoff += col[c] * table.at(r, c);
    best_row = std::max(best_row, payoff);
  }
  double best_col = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < table.cols; ++c) {
    double payoff = 0.0;
    for (int r = 0; r < table.rows; ++r) payoff -= row[r] * table.at(r, c);
    best_col = std::max(best_col, payoff);
  }
  return (best_row - value) + (best_col + value);
}

namespace {

void MatchFromRegrets(const std::vector<double>& regrets,
                      std::vector<double>& strategy) {
  double positive = 0.0;
  for (double r : regrets) positive += std::max(0.0, r);
  if (positive > 0.0) {
    for (size_t i = 0; i < regrets.size(); ++i) {
      strategy[i] = std::max(0.0, regrets[i]) / positive;
    }
  } else {
    std::fill(strategy.begin(), strategy.end(), 1.0 / strategy.size());
  }
}

MetaPolicy NormalizedAverage(const std::vector<double>& accumulated) {
  const double sum =
      std::accumulate(accumulated.begin(), accumulated.end(), 0.0);
  MetaPolicy out(accumulated.size());
  if (sum > 0.0) {
    for (size_t i = 0; i < out.size(); ++i) out[i] = accumulated[i] / sum;
  } else {
    std::fill(out.begin(), out.end(), 1.0 / out.size());
  }
  return out;
}

// Solves A x = b in the least-squares sense via normal equations with
// partial-pivot elimination. Returns an empty vector when near-singular.
std::vector<double> SolveLeastSquares(const std::vector<std::vector<double>>& a,
                                      const std::vector<double>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
  std::vector<std::vector<double>> ata(cols, std::vector<double>(cols, 0.0));
  std::vector<double> atb(cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < cols; ++i) {
      atb[i] += a[r][i] * b[r];
      for (int j = 0; j < cols; ++j) ata[i][j] += a[r][i] * a[r][j];
    }
  }
  std::vector<int> perm(cols);
  for (int i = 0; i < cols; ++i) perm[i] = i;
  for (int k = 0; k < cols; ++k) {
    int pivot = k;
    for (int i = k + 1; i < cols; ++i) {
      if (std::abs(ata[i][k]) > std::abs(ata[pivot][k])) pivot = i;
    }
    if (std::abs(ata[pivot][k]) < 1e-12) return {};
    std::swap(ata[pivot], ata[k]);
    std::swap(atb[pivot], atb[k]);
    for (int i = k + 1; i < cols; ++i) {
      const double f = ata[i][k] / ata[k][k];
      for (int j = k; j < cols; ++j) ata[i][j] -= f * ata[k][j];
      atb[i] -= f * atb[k];
    }
  }
  std::vector<double> x(cols, 0.0);
  for (int k = cols - 1; k >= 0; --k) {
    double v = atb[k];
    for (int j = k + 1; j < cols; ++j) v -= ata[k][j] * x[j];
    x[k] = v / ata[k][k];
  }
  return x;
}

// Refines an approximate equilibrium by solving the indifference equations
// restricted to its apparent support: on-support pure strategies of each
// player earn exactly the game value against the other's mixed strategy.
// The result is clamped to the simplex and accepted only via the
// pure-deviation certificate.
bool PolishFromSupports(const PayoffTable& table, double support_tol,
                        const MetaPolicy& row_guess, const MetaPolicy& col_guess,
                        NashResult& best) {
  const int nr = table.rows;
  const int nc = table.cols;
  std::vector<int> row_support, col_support;
  for (int r = 0; r < nr; ++r) {
    if (row_guess[r] > support_tol) row_support.push_back(r);
  }
  for (int c = 0; c < nc; ++c) {
    if (col_guess[c] > support_tol) col_support.push_back(c);
  }
  if (row_support.empty() || col_support.empty()) return false;

  // Column strategy from the row player's indifference over row_support.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (int r : row_support) {
    std::vector<double> eq(col_support.size() + 1, 0.0);
    for (size_t j = 0; j < col_support.size(); ++j) {
      eq[j] = table.at(r, col_support[j]);
    }
    eq[col_support.size()] = -1.0;  // minus the game value
    a.push_back(std::move(eq));
    b.push_back(0.0);
  }
  {
    std::vector<double> eq(col_support.size() + 1, 0.0);
    std::fill(eq.begin(), eq.end() - 1, 1.0);
    a.push_back(std::move(eq));
    b.push_back(1.0);
  }
  const std::vector<double> col_solution = SolveLeastSquares(a, b);
  if (col_solution.empty()) return false;

  // Row strategy from the column player's indifference over col_support.
  a.clear();
  b.clear();
  for (int c : col_support) {
    std::vector<double> eq(row_support.size() + 1, 0.0);
    for (size_t i = 0; i < row_support.size(); ++i) {
      eq[i] = table.at(row_support[i], c);
    }
    eq[row_support.size()] = -1.0;
    a.push_back(std::move(eq));
    b.push_back(0.0);
  }
  {
    std::vector<double> eq(row_support.size() + 1, 0.0);
    std::fill(eq.begin(), eq.end() - 1, 1.0);
    a.push_back(std::move(eq));
    b.push_back(1.0);
  }
  const std::vector<double> row_solution = SolveLeastSquares(a, b);
  if (row_solution.empty()) return false;

  NashResult candidate;
  candidate.row.assign(nr, 0.0);
  candidate.col.assign(nc, 0.0);
  double row_mass = 0.0, col_mass = 0.0;
  for (size_t i = 0; i < row_support.size(); ++i) {
    candidate.row[row_support[i]] = std::max(0.0, row_solution[i]);
    row_mass += candidate.row[row_support[i]];
  }
  for (size_t j = 0; j < col_support.size(); ++j) {
    candidate.col[col_support[j]] = std::max(0.0, col_solution[j]);
    col_mass += candidate.col[col_support[j]];
  }
  if (row_mass <= 0.0 || col_mass <= 0.0) return false;
  for (double& w : candidate.row) w /= row_mass;
  for (double& w : candidate.col) w /= col_mass;

  double value = 0.0;
  for (int r = 0; r < nr; ++r) {
    if (candidate.row[r] == 0.0) continue;
    for (int c = 0; c < nc; ++c) {
      value += candidate.row[r] * candidate.col[c] * table.at(r, c);
    }
  }
  candidate.value = value;
  candidate.certificate = RestrictedExploitability(table, candidate.row,
                                                   candidate.col);
  if (candidate.certificate < best.certificate) {
    best = candidate;
    return true;
  }
  return false;
}

}  // namespace

NashResult SolveNashZeroSum(const PayoffTable& table, double tol,
                            int64_t max_iters) {
  if (table.rows < 1 || table.cols < 1) {
    throw std::invalid_argument("SolveNashZeroSum: empty table");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("SolveNashZeroSum: tol > 0");
  const int nr = table.rows;
  const int nc = table.cols;

  std::vector<double> row_regret(nr, 0.0), col_regret(nc, 0.0);
  std::vector<double> row_strategy(nr, 1.0 / nr), col_strategy(nc, 1.0 / nc);
  std::vector<double> row_avg(nr, 0.0), col_avg(nc, 0.0);
  std::vector<double> row_payoff(nr, 0.0), col_payoff(nc, 0.0);

  const auto certify = [&](NashResult& out) {
    out.row = NormalizedAverage(row_avg);
    out.col = NormalizedAverage(col_avg);
    double value = 0.0;
    for (int r = 0; r < nr; ++r) {
      for (int c = 0; c < nc; ++c) {
        value += out.row[r] * out.col[c] * table.at(r, c);
      }
    }
    out.value = value;
    out.certificate = RestrictedExploitability(table, out.row, out.col);
  };

  NashResult best;
  certify(best);
  if (best.certificate <= tol) return best;

  const int64_t check_every = 64;
  for (int64_t t = 1; t <= max_iters; ++t) {
    // Row observes payoffs against the current column strategy.
    for (int r = 0; r < nr; ++r) {
      double payoff = 0.0;
      for (int c = 0; c < nc; ++c) payoff += col_strategy[c] * table.at(r, c);
      row_payoff[r] = payoff;
    }
    double row_value = 0.0;
    for (int r = 0; r < nr; ++r) row_value += row_strategy[r] * row_payoff[r];
    for (int r = 0; r < nr; ++r) {
      row_regret[r] =
          std::max(0.0, row_regret[r] + row_payoff[r] - row_value);
    }
    MatchFromRegrets(row_regret, row_strategy);
    for (int r = 0; r < nr; ++r) {
      row_avg[r] += static_cast<double>(t) * row_strategy[r];
    }

    // Column (minimizer) observes the updated row strategy: alternation.
    for (int c = 0; c < nc; ++c) {
      double payoff = 0.0;
      for (int r = 0; r < nr; ++r) payoff -= row_strategy[r] * table.at(r, c);
      col_payoff[c] = payoff;
    }
    double col_value = 0.0;
    for (int c = 0; c < nc; ++c) col_value += col_strategy[c] * col_payoff[c];
    for (int c = 0; c < nc; ++c) {
      col_regret[c] =
          std::max(0.0, col_regret[c] + col_payoff[c] - col_value);
    }
    MatchFromRegrets(col_regret, col_strategy);
    for (int c = 0; c < nc; ++c) {
      col_avg[c] += static_cast<double>(t) * col_strategy[c];
    }

    if (t % check_every == 0 || t == max_iters) {
      NashResult candidate;
      certify(candidate);
      if (candidate.certificate < best.certificate) best = candidate;
      for (double support_tol : {1e-3, 1e-6, 1e-9}) {
        PolishFromSupports(table, support_tol, candidate.row, candidate.col,
                           best);
      }
      if (best.certificate <= tol) return best;
    }
  }
  throw MetaSolverError(
      "SolveNashZeroSum: certificate " + std::to_string(best.certificate) +
          " did not reach tolerance " + std::to_string(tol),
      best.certificate);
}

MetaPolicy SolveNashSymmetric(const PayoffTable& table, double tol,
                              int64_t max_iters) {
  if (table.rows != table.cols) {
    throw std::invalid_argument("SolveNashSymmetric: table must be square");
  }
  NashResult result = SolveNashZeroSum(table, tol, max_iters);
  MetaPolicy sigma(table.rows);
  for (int i = 0; i < table.rows; ++i) {
    sigma[i] = 0.5 * (result.row[i] + result.col[i]);
  }
  // In a symmetric zero-sum game the averaged strategy pairs with itself;
  // keep whichever of the candidates certifies better.
  if (RestrictedExploitability(table, sigma, sigma) <=
      RestrictedExploitability(table, result.row, result.row)) {
    return sigma;
  }
  return result.row;
}

namespace {

MetaPolicy NormalizeScores(std::vector<double> scores) {
  const double sum = std::accumulate(scores.begin(), scores.end(), 0.0);
  if (sum <= 0.0) return SolveUniform(static_cast<int>(scores.size()));
  for (double& s : scores) s /= sum;
  return scores;
}

}  // namespace

MetaPolicy PrioritizedScoresMain(const TeamGame& game,
                                 const ProductPolicy& current,
                                 const std::vector<ProductPolicy>& population) {
  if (population.empty()) {
    throw std::invalid_argument("PrioritizedScoresMain: empty population");
  }
  const MixturePolicy current_mixture = MixturePolicy::Single(current);
  std::vector<double> scores(population.size());
  for (size_t i = 0; i < population.size(); ++i) {
    scores[i] = ComputeWinProbability(game, MixturePolicy::Single(population[i]),
                                      current_mixture)
                    .win;
  }
  return NormalizeScores(std::move(scores));
}

MetaPolicy PrioritizedScoresCounter(
    const TeamGame& game, const ProductPolicy& current,
    const std::vector<ProductPolicy>& population) {
  if (population.empty()) {
    throw std::invalid_argument("PrioritizedScoresCounter: empty population");
  }
  const MixturePolicy current_mixture = MixturePolicy::Single(current);
  std::vector<double> scores(population.size());
  for (size_t i = 0; i < population.size(); ++i) {
    const WinProbability wp = ComputeWinProbability(
        game, MixturePolicy::Single(population[i]), current_mixture);
    scores[i] = wp.win * wp.lose;
  }
  return NormalizeScores(std::move(scores));
}

}  // namespace crossplay
