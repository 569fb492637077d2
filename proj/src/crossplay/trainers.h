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

#ifndef CROSSPLAY_TRAINERS_H_
#define CROSSPLAY_TRAINERS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crossplay/game.h"
#include "crossplay/learners.h"
#include "crossplay/meta.h"

namespace crossplay {

enum class Algorithm { kSp, kFsp, kPsro, kOdo, kFxp };

Algorithm AlgorithmFromString(const std::string& name);
std::string AlgorithmToString(Algorithm algorithm);

enum class MetaSolverKind { kUniform, kNash, kPrioritized };

MetaSolverKind MetaSolverFromString(const std::string& name);

enum class InitMode { kUniform, kRandom };

struct TrainConfig {
  Algorithm algorithm = Algorithm::kSp;
  UpdateRule rule = UpdateRule::kStepwiseBr;

  int64_t total_steps = 1000;
  int steps_per_iter = 50;  // population algorithms; also the plateau cap

  double lr = 0.1;
  double eta = 0.3;        // self-play weight for FSP and the FXP main policy
  double eta_decay = 1.0;  // multiplied into eta once per iteration
  double forel_base_lr = 20.0;
  double replicator_dt = 0.8;
  double mwu_k = 10.0;

  MetaSolverKind meta_solver = MetaSolverKind::kNash;     // sigma / sigma_{M+C}
  MetaSolverKind counter_solver = MetaSolverKind::kNash;  // sigma_M, sigma_C
  double nash_tol = 1e-6;

  bool psro_reset = true;     // train each PSRO best response from scratch
  bool counter_reset = true;  // re-initialize the FXP counter every iteration
  bool main_reset = false;    // ablation: also re-initialize the FXP main

  bool use_plateau = false;  // stop an iteration early when the policy settles
  double plateau_tol = 1e-6;
  int plateau_window = 20;

  int64_t eval_every = 1;
  double convergence_threshold = 1e-2;

  InitMode init = InitMode::kUniform;
  uint64_t seed = 0;

  // When true, exploitability is reported for the running average of past
  // policies instead of the current one (the convention for FSP and CFR).
  // Population algorithms always evaluate their meta-policy mixture.
  bool eval_average = false;

  void Validate() const;
};

struct EvalPoint {
  int64_t step = 0;
  double exploitability = 0.0;
  // Per-agent marginal P(action 1) of the evaluated mixture; two-action
  // games only, empty otherwise.
  std::vector<double> marginals;
};

struct RunRecord {
  std::vector<EvalPoint> points;
  std::optional<int64_t> convergence_step;
  int64_t total_steps_run = 0;
  MixturePolicy evaluated;  // final evaluation target
  std::vector<ProductPolicy> main_population;
  std::vector<ProductPolicy> counter_population;
  MetaPolicy meta_weights;          // sigma over the evaluated population
  MetaPolicy counter_row_weights;   // FXP sigma_M
  MetaPolicy counter_col_weights;   // FXP sigma_C
  double final_exploitability() const {
    return points.empty() ? 0.0 : points.back().exploitability;
  }
};

// Exploitability of the evaluation target, computed from its aggregated
// row/column feature expectations so that running averages and meta-policy
// mixtures evaluate incrementally. Defaults to full-game team exploitability;
// overridable (e.g. reference-policy exploitability for SAD).
using EvalFn = std::function<double(const TeamGame&, std::span<const double>,
                                    std::span<const double>)>;

EvalFn TeamExploitabilityEval();

double EvaluateMixture(const TeamGame& game, const EvalFn& eval,
                       const MixturePolicy& mixture);

// True when the max per-agent L-inf change between consecutive policies
// stayed below `tol` for `window` consecutive steps.
class PlateauDetector {
 public:
  PlateauDetector(double tol, int window) : tol_(tol), window_(window) {}
  // Feeds the policy after a step; returns true once plateaued.
  bool Update(const ProductPolicy& policy);
  void Reset();

 private:
  double tol_;
  int window_;
  int quiet_steps_ = 0;
  std::optional<ProductPolicy> last_;
};

bool DetectPlateau(const std::vector<ProductPolicy>& history, double tol,
                   int window);

RunRecord RunSp(const TeamGame& game, const TrainConfig& config,
                const EvalFn& eval);
RunRecord RunFsp(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval);
RunRecord RunPsro(const TeamGame& game, const TrainConfig& config,
                  const EvalFn& eval);
RunRecord RunOdo(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval);
RunRecord RunFxp(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval);

// Dispatches on config.algorithm.
RunRecord RunTraining(const TeamGame& game, const TrainConfig& config,
                      const EvalFn& eval = TeamExploitabilityEval());

// Initial product policy for a run: uniform, or i.i.d. uniform draws
// normalized per agent when config.init is kRandom.
ProductPolicy MakeInitialPolicy(const TeamGame& game, const TrainConfig& config);

}  // namespace crossplay

#endif  // CROSSPLAY_TRAINERS_H_
