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

#include "crossplay/trainers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace crossplay {

Algorithm AlgorithmFromString(const std::string& name) {
  if (name == "sp") return Algorithm::kSp;
  if (name == "fsp") return Algorithm::kFsp;
  if (name == "psro") return Algorithm::kPsro;
  if (name == "odo") return Algorithm::kOdo;
  if (name == "fxp") return Algorithm::kFxp;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string AlgorithmToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSp: return "sp";
    case Algorithm::kFsp: return "fsp";
    case Algorithm::kPsro: return "psro";
    case Algorithm::kOdo: return "odo";
    case Algorithm::kFxp: return "fxp";
  }
  throw std::invalid_argument("unknown algorithm enum");
}

MetaSolverKind MetaSolverFromString(const std::string& name) {
  if (name == "uniform") return MetaSolverKind::kUniform;
  if (name == "nash") return MetaSolverKind::kNash;
  if (name == "prioritized") return MetaSolverKind::kPrioritized;
  throw std::invalid_argument("unknown meta-solver: " + name);
}

void TrainConfig::Validate() const {
  if (total_steps < 1) throw std::invalid_argument("total_steps must be >= 1");
  if (steps_per_iter < 1) {
    throw std::invalid_argument("steps_per_iter must be >= 1");
  }
  if (!(lr > 0.0 && lr <= 1.0)) {
    throw std::invalid_argument("lr must be in (0, 1]");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must be in [0, 1]");
  }
  if (!(eta_decay > 0.0 && eta_decay <= 1.0)) {
    throw std::invalid_argument("eta_decay must be in (0, 1]");
  }
  if (eval_every < 1) throw std::invalid_argument("eval_every must be >= 1");
  if (plateau_window < 1) {
    throw std::invalid_argument("plateau_window must be >= 1");
  }
  if (!(nash_tol > 0.0)) throw std::invalid_argument("nash_tol must be > 0");
}

EvalFn TeamExploitabilityEval() {
  return [](const TeamGame& game, std::span<const double> row_feats,
            std::span<const double> col_feats) {
    const std::vector<double> row_gain = game.RowValues(col_feats);
    const std::vector<double> col_gain = game.ColValues(row_feats);
    return *std::max_element(row_gain.begin(), row_gain.end()) +
           *std::max_element(col_gain.begin(), col_gain.end());
  };
}

double EvaluateMixture(const TeamGame& game, const EvalFn& eval,
                       const MixturePolicy& mixture) {
  return eval(game, game.RowFeatureExpectation(mixture),
              game.ColFeatureExpectation(mixture));
}

bool PlateauDetector::Update(const ProductPolicy& policy) {
  if (last_.has_value()) {
    double change = 0.0;
    for (int i = 0; i < policy.num_agents(); ++i) {
      for (int a = 0; a < policy.num_actions(); ++a) {
        change = std::max(change,
                          std::abs(policy.dists[i][a] - last_->dists[i][a]));
      }
    }
    quiet_steps_ = change < tol_ ? quiet_steps_ + 1 : 0;
  }
  last_ = policy;
  return quiet_steps_ >= window_;
}

void PlateauDetector::Reset() {
  quiet_steps_ = 0;
  last_.reset();
}

bool DetectPlateau(const std::vector<ProductPolicy>& history, double tol,
                   int window) {
  if (window < 1) throw std::invalid_argument("DetectPlateau: window >= 1");
  PlateauDetector detector(tol, window);
  bool plateaued = false;
  for (const ProductPolicy& policy : history) {
    plateaued = detector.Update(policy);
  }
  return plateaued;
}

ProductPolicy MakeInitialPolicy(const TeamGame& game,
                                const TrainConfig& config) {
  if (config.init == InitMode::kUniform) {
    return ProductPolicy::Uniform(game.team_size(), game.action_count());
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProductPolicy policy;
  policy.dists.assign(game.team_size(),
                      std::vector<double>(game.action_count(), 0.0));
  for (auto& dist : policy.dists) {
    if (game.action_count() == 2) {
      const double p = unit(rng);
      dist[0] = p;
      dist[1] = 1.0 - p;
    } else {
      double sum = 0.0;
      for (double& v : dist) {
        v = unit(rng);
        sum += v;
      }
      for (double& v : dist) v /= sum;
    }
  }
  return policy;
}

namespace {

// Per-agent marginal P(action 1), defined for two-action games.
std::vector<double> MixtureMarginals(const std::vector<ProductPolicy>& members,
                                     const std::vector<double>& weights,
                                     int action_count) {
  if (action_count != 2 || members.empty()) return {};
  std::vector<double> marginals(members[0].num_agents(), 0.0);
  for (size_t m = 0; m < members.size(); ++m) {
    for (int i = 0; i < members[m].num_agents(); ++i) {
      marginals[i] += weights[m] * members[m].dists[i][1];
    }
  }
  return marginals;
}

class Recorder {
 public:
  explicit Recorder(const TrainConfig& config) : config_(config) {}

  void RecordOrUpdate(int64_t step, double exploitability,
                      std::vector<double> marginals) {
    if (!points_.empty() && points_.back().step == step) {
      points_.back().exploitability = exploitability;
      points_.back().marginals = std::move(marginals);
    } else {
      points_.push_back(EvalPoint{step, exploitability, std::move(marginals)});
    }
    if (!convergence_step_ &&
        exploitability <= config_.convergence_threshold) {
      convergence_step_ = step;
    }
  }

  bool Due(int64_t step) const { return step % config_.eval_every == 0; }

  void FinishInto(RunRecord& record) {
    record.points = std::move(points_);
    record.convergence_step = convergence_step_;
  }

 private:
  const TrainConfig& config_;
  std::vector<EvalPoint> points_;
  std::optional<int64_t> convergence_step_;
};

LearnerOptions MakeLearnerOptions(const TrainConfig& config) {
  LearnerOptions options;
  options.rule = config.rule;
  options.lr = config.lr;
  options.forel_base_lr = config.forel_base_lr;
  options.replicator_dt = config.replicator_dt;
  options.mwu_k = config.mwu_k;
  return options;
}

std::vector<double> Combine(std::span<const double> a, double wa,
                            std::span<const double> b, double wb) {
  std::vector<double> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = wa * a[k] + wb * b[k];
  return out;
}

// Shared loop for SP and FSP: the opponent is the current policy blended
// with the running average of past policies (weight 1 on the current policy
// for plain SP).
RunRecord RunSelfPlayFamily(const TeamGame& game, const TrainConfig& config,
                            const EvalFn& eval, bool fictitious) {
  config.Validate();
  const int n = game.team_size();
  const int a = game.action_count();
  const int rank = game.rank();

  Learner learner(n, a, MakeLearnerOptions(config));
  learner.InitializeAt(MakeInitialPolicy(game, config));

  // FSP and average-policy evaluation both need the running sums of the
  // policy history's feature expectations and marginals.
  const bool track_history = fictitious || config.eval_average;
  std::vector<double> row_sum(rank, 0.0), col_sum(rank, 0.0);
  std::vector<double> marginal_sum(n, 0.0);
  std::vector<ProductPolicy> history;
  int64_t history_count = 0;
  const auto push_history = [&](const ProductPolicy& policy) {
    if (!track_history) return;
    const std::vector<double> rf = game.RowFeatureExpectation(policy);
    const std::vector<double> cf = game.ColFeatureExpectation(policy);
    for (int k = 0; k < rank; ++k) {
      row_sum[k] += rf[k];
      col_sum[k] += cf[k];
    }
    if (a == 2) {
      for (int i = 0; i < n; ++i) marginal_sum[i] += policy.dists[i][1];
    }
    history.push_back(policy);
    ++history_count;
  };
  push_history(learner.policy());

  const bool eval_on_average = track_history && (fictitious || config.eval_average);
  Recorder recorder(config);
  const auto evaluate_now = [&]() -> std::pair<double, std::vector<double>> {
    if (eval_on_average) {
      const double inv = 1.0 / static_cast<double>(history_count);
      std::vector<double> rf(rank), cf(rank);
      for (int k = 0; k < rank; ++k) {
        rf[k] = row_sum[k] * inv;
        cf[k] = col_sum[k] * inv;
      }
      std::vector<double> marginals;
      if (a == 2) {
        marginals.resize(n);
        for (int i = 0; i < n; ++i) marginals[i] = marginal_sum[i] * inv;
      }
      return {eval(game, rf, cf), std::move(marginals)};
    }
    const ProductPolicy& policy = learner.policy();
    const auto rf = game.RowFeatureExpectation(policy);
    const auto cf = game.ColFeatureExpectation(policy);
    std::vector<double> marginals;
    if (a == 2) {
      marginals.resize(n);
      for (int i = 0; i < n; ++i) marginals[i] = policy.dists[i][1];
    }
    return {eval(game, rf, cf), std::move(marginals)};
  };

  {
    auto [e, marg] = evaluate_now();
    recorder.RecordOrUpdate(0, e, std::move(marg));
  }

  for (int64_t t = 1; t <= config.total_steps; ++t) {
    const std::vector<double> self_feats =
        game.ColFeatureExpectation(learner.policy());
    std::vector<double> opponent_feats;
    if (fictitious && config.eta < 1.0) {
      const double inv = 1.0 / static_cast<double>(history_count);
      std::vector<double> avg(rank);
      for (int k = 0; k < rank; ++k) avg[k] = col_sum[k] * inv;
      opponent_feats = Combine(self_feats, config.eta, avg, 1.0 - config.eta);
    } else {
      opponent_feats = self_feats;
    }
    const QResult q = ComputeQFromColFeatures(game, learner.policy(),
                                              opponent_feats);
    learner.Step(q.q, q.value);
    push_history(learner.policy());
    if (recorder.Due(t) || t == config.total_steps) {
      auto [e, marg] = evaluate_now();
      recorder.RecordOrUpdate(t, e, std::move(marg));
    }
  }

  RunRecord record;
  recorder.FinishInto(record);
  record.total_steps_run = config.total_steps;
  if (eval_on_average) {
    record.evaluated = MixturePolicy::UniformOver(history);
  } else {
    record.evaluated = MixturePolicy::Single(learner.policy());
  }
  record.main_population = {learner.policy()};
  record.meta_weights = {1.0};
  return record;
}

}  // namespace

RunRecord RunSp(const TeamGame& game, const TrainConfig& config,
                const EvalFn& eval) {
  return RunSelfPlayFamily(game, config, eval, /*fictitious=*/false);
}

RunRecord RunFsp(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval) {
  return RunSelfPlayFamily(game, config, eval, /*fictitious=*/true);
}

namespace {

// Cached per-member feature expectations for a growing population.
struct PopulationCache {
  std::vector<ProductPolicy> members;
  std::vector<std::vector<double>> row_feats;
  std::vector<std::vector<double>> col_feats;

  void Append(const TeamGame& game, ProductPolicy policy) {
    row_feats.push_back(game.RowFeatureExpectation(policy));
    col_feats.push_back(game.ColFeatureExpectation(policy));
    members.push_back(std::move(policy));
  }

  int size() const { return static_cast<int>(members.size()); }

  std::vector<double> WeightedRowFeats(const MetaPolicy& weights) const {
    std::vector<double> out(row_feats[0].size(), 0.0);
    for (int m = 0; m < size(); ++m) {
      for (size_t k = 0; k < out.size(); ++k) {
        out[k] += weights[m] * row_feats[m][k];
      }
    }
    return out;
  }

  std::vector<double> WeightedColFeats(const MetaPolicy& weights) const {
    std::vector<double> out(col_feats[0].size(), 0.0);
    for (int m = 0; m < size(); ++m) {
      for (size_t k = 0; k < out.size(); ++k) {
        out[k] += weights[m] * col_feats[m][k];
      }
    }
    return out;
  }
};

MetaPolicy SolveMeta(const TeamGame& game, const TrainConfig& config,
                     MetaSolverKind kind, const PayoffTable& table,
                     const PopulationCache& population,
                     const ProductPolicy& current) {
  switch (kind) {
    case MetaSolverKind::kUniform:
      return SolveUniform(population.size());
    case MetaSolverKind::kNash:
      return SolveNashSymmetric(table, config.nash_tol);
    case MetaSolverKind::kPrioritized:
      return PrioritizedScoresMain(game, current, population.members);
  }
  throw std::invalid_argument("unknown meta-solver kind");
}

}  // namespace

RunRecord RunPsro(const TeamGame& game, const TrainConfig& config,
                  const EvalFn& eval) {
  config.Validate();
  const int n = game.team_size();
  const int a = game.action_count();

  PopulationCache population;
  population.Append(game, MakeInitialPolicy(game, config));
  PayoffTable table;

  Learner learner(n, a, MakeLearnerOptions(config));
  Recorder recorder(config);
  PlateauDetector plateau(config.plateau_tol, config.plateau_window);

  MetaPolicy sigma;
  int64_t total = 0;
  bool first_iteration = true;
  while (total < config.total_steps) {
    ExtendPayoffs(game, table, population.members, population.members);
    sigma = SolveMeta(game, config, config.meta_solver, table, population,
                      learner.policy());
    const double cached_e = eval(game, population.WeightedRowFeats(sigma),
                                 population.WeightedColFeats(sigma));
    std::vector<double> cached_marginals =
        MixtureMarginals(population.members, sigma, a);
    recorder.RecordOrUpdate(total, cached_e, cached_marginals);

    if (first_iteration) {
      learner.InitializeAt(population.members[0]);
    } else if (config.psro_reset) {
      learner.InitializeAt(ProductPolicy::Uniform(n, a));
    }
    first_iteration = false;

    const std::vector<double> opponent_feats =
        population.WeightedColFeats(sigma);
    plateau.Reset();
    const int64_t budget =
        std::min<int64_t>(config.steps_per_iter, config.total_steps - total);
    for (int64_t s = 0; s < budget; ++s) {
      const QResult q =
          ComputeQFromColFeatures(game, learner.policy(), opponent_feats);
      learner.Step(q.q, q.value);
      ++total;
      if (recorder.Due(total)) {
        recorder.RecordOrUpdate(total, cached_e, cached_marginals);
      }
      if (config.use_plateau && plateau.Update(learner.policy())) break;
    }
    population.Append(game, learner.policy());
  }

  ExtendPayoffs(game, table, population.members, population.members);
  sigma = SolveMeta(game, config, config.meta_solver, table, population,
                    learner.policy());
  recorder.RecordOrUpdate(total,
                          eval(game, population.WeightedRowFeats(sigma),
                               population.WeightedColFeats(sigma)),
                          MixtureMarginals(population.members, sigma, a));

  RunRecord record;
  recorder.FinishInto(record);
  record.total_steps_run = total;
  record.main_population = population.members;
  record.meta_weights = sigma;
  record.evaluated.members = population.members;
  record.evaluated.weights = sigma;
  return record;
}

RunRecord RunOdo(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval) {
  config.Validate();
  const int n = game.team_size();
  const int a = game.action_count();

  PopulationCache population;
  population.Append(game, MakeInitialPolicy(game, config));

  Learner learner(n, a, MakeLearnerOptions(config));
  Recorder recorder(config);

  MetaPolicy weights = SolveUniform(1);
  recorder.RecordOrUpdate(0,
                          eval(game, population.WeightedRowFeats(weights),
                               population.WeightedColFeats(weights)),
                          MixtureMarginals(population.members, weights, a));

  int64_t total = 0;
  while (total < config.total_steps) {
    weights = SolveUniform(population.size());
    learner.InitializeAt(ProductPolicy::Uniform(n, a));
    const int64_t budget =
        std::min<int64_t>(config.steps_per_iter, config.total_steps - total);
    for (int64_t s = 0; s < budget; ++s) {
      const QResult q = ComputeQFromColFeatures(
          game, learner.policy(), population.WeightedColFeats(weights));
      learner.Step(q.q, q.value);
      ++total;

      // Online meta-update: multiplicative weights over the population's
      // payoffs against the learner's current policy, step size 1/sqrt(t).
      const std::vector<double> learner_col =
          game.ColFeatureExpectation(learner.policy());
      std::vector<double> payoffs(population.size());
      double max_payoff = -std::numeric_limits<double>::infinity();
      for (int m = 0; m < population.size(); ++m) {
        double u = 0.0;
        for (int k = 0; k < game.rank(); ++k) {
          u += population.row_feats[m][k] * learner_col[k];
        }
        payoffs[m] = u;
        max_payoff = std::max(max_payoff, u);
      }
      const double step_size = 1.0 / std::sqrt(static_cast<double>(total));
      double norm = 0.0;
      for (int m = 0; m < population.size(); ++m) {
        weights[m] *= std::exp(step_size * (payoffs[m] - max_payoff));
        norm += weights[m];
      }
      for (double& w : weights) w /= norm;

      if (recorder.Due(total)) {
        recorder.RecordOrUpdate(total,
                                eval(game, population.WeightedRowFeats(weights),
                                     population.WeightedColFeats(weights)),
                                MixtureMarginals(population.members, weights,
                                                 a));
      }
    }
    population.Append(game, learner.policy());
  }

  recorder.RecordOrUpdate(total,
                          eval(game, population.WeightedRowFeats(weights),
                               population.WeightedColFeats(weights)),
                          MixtureMarginals(population.members, weights, a));

  RunRecord record;
  recorder.FinishInto(record);
  record.total_steps_run = total;
  record.main_population = population.members;
  record.meta_weights = weights;
  record.evaluated.members = population.members;
  record.evaluated.weights = weights;
  return record;
}

RunRecord RunFxp(const TeamGame& game, const TrainConfig& config,
                 const EvalFn& eval) {
  config.Validate();
  const int n = game.team_size();
  const int a = game.action_count();

  PopulationCache main_pop, counter_pop, joint_pop;
  const ProductPolicy init = MakeInitialPolicy(game, config);
  main_pop.Append(game, init);
  counter_pop.Append(game, init);
  joint_pop.Append(game, init);  // main checkpoint
  joint_pop.Append(game, init);  // counter checkpoint

  Learner main_learner(n, a, MakeLearnerOptions(config));
  Learner counter_learner(n, a, MakeLearnerOptions(config));
  main_learner.InitializeAt(init);
  counter_learner.InitializeAt(init);

  PayoffTable joint_table;    // U_{M+C}: joint population vs itself
  PayoffTable cross_table;    // U_{M x C}: main rows, counter columns

  Recorder recorder(config);
  PlateauDetector plateau(config.plateau_tol, config.plateau_window);

  double eta = config.eta;
  MetaPolicy sigma_joint, sigma_main, sigma_counter;
  int64_t total = 0;
  while (total < config.total_steps) {
    ExtendPayoffs(game, joint_table, joint_pop.members, joint_pop.members);
    ExtendPayoffs(game, cross_table, main_pop.members, counter_pop.members);

    switch (config.meta_solver) {
      case MetaSolverKind::kUniform:
        sigma_joint = SolveUniform(joint_pop.size());
        break;
      case MetaSolverKind::kNash:
        sigma_joint = SolveNashSymmetric(joint_table, config.nash_tol);
        break;
      case MetaSolverKind::kPrioritized:
        sigma_joint = PrioritizedScoresMain(game, main_learner.policy(),
                                            joint_pop.members);
        break;
    }
    switch (config.counter_solver) {
      case MetaSolverKind::kUniform:
        sigma_main = SolveUniform(main_pop.size());
        sigma_counter = SolveUniform(counter_pop.size());
        break;
      case MetaSolverKind::kNash: {
        const NashResult nash = SolveNashZeroSum(cross_table, config.nash_tol);
        sigma_main = nash.row;
        sigma_counter = nash.col;
        break;
      }
      case MetaSolverKind::kPrioritized:
        sigma_main = PrioritizedScoresCounter(game, counter_learner.policy(),
                                              main_pop.members);
        sigma_counter = SolveUniform(counter_pop.size());
        break;
    }

    const double cached_e = eval(game, joint_pop.WeightedRowFeats(sigma_joint),
                                 joint_pop.WeightedColFeats(sigma_joint));
    std::vector<double> cached_marginals =
        MixtureMarginals(joint_pop.members, sigma_joint, a);
    recorder.RecordOrUpdate(total, cached_e, cached_marginals);

    if (config.main_reset) main_learner.InitializeAt(ProductPolicy::Uniform(n, a));
    if (config.counter_reset) {
      counter_learner.InitializeAt(ProductPolicy::Uniform(n, a));
    }

    const std::vector<double> joint_feats =
        joint_pop.WeightedColFeats(sigma_joint);
    const std::vector<double> main_opponent_feats =
        main_pop.WeightedColFeats(sigma_main);

    // Main policy: best response to eta * itself + (1 - eta) * sigma_{M+C}.
    plateau.Reset();
    int64_t budget =
        std::min<int64_t>(config.steps_per_iter, config.total_steps - total);
    for (int64_t s = 0; s < budget; ++s) {
      std::vector<double> opponent_feats;
      if (eta >= 1.0) {
        opponent_feats = game.ColFeatureExpectation(main_learner.policy());
      } else if (eta <= 0.0) {
        opponent_feats = joint_feats;
      } else {
        opponent_feats =
            Combine(game.ColFeatureExpectation(main_learner.policy()), eta,
                    joint_feats, 1.0 - eta);
      }
      const QResult q = ComputeQFromColFeatures(game, main_learner.policy(),
                                                opponent_feats);
      main_learner.Step(q.q, q.value);
      ++total;
      if (recorder.Due(total)) {
        recorder.RecordOrUpdate(total, cached_e, cached_marginals);
      }
      if (config.use_plateau && plateau.Update(main_learner.policy())) break;
    }

    // Counter policy: best response to sigma_M over the main population.
    plateau.Reset();
    budget =
        std::min<int64_t>(config.steps_per_iter, config.total_steps - total);
    for (int64_t s = 0; s < budget; ++s) {
      const QResult q = ComputeQFromColFeatures(game, counter_learner.policy(),
                                                main_opponent_feats);
      counter_learner.Step(q.q, q.value);
      ++total;
      if (recorder.Due(total)) {
        recorder.RecordOrUpdate(total, cached_e, cached_marginals);
      }
      if (config.use_plateau && plateau.Update(counter_learner.policy())) {
        break;
      }
    }

    main_pop.Append(game, main_learner.policy());
    counter_pop.Append(game, counter_learner.policy());
    joint_pop.Append(game, main_learner.policy());
    joint_pop.Append(game, counter_learner.policy());
    eta *= config.eta_decay;
  }

  ExtendPayoffs(game, joint_table, joint_pop.members, joint_pop.members);
  ExtendPayoffs(game, cross_table, main_pop.members, counter_pop.members);
  switch (config.meta_solver) {
    case MetaSolverKind::kUniform:
      sigma_joint = SolveUniform(joint_pop.size());
      break;
    case MetaSolverKind::kNash:
      sigma_joint = SolveNashSymmetric(joint_table, config.nash_tol);
      break;
    case MetaSolverKind::kPrioritized:
      sigma_joint = PrioritizedScoresMain(game, main_learner.policy(),
                                          joint_pop.members);
      break;
  }
  recorder.RecordOrUpdate(total,
                          eval(game, joint_pop.WeightedRowFeats(sigma_joint),
                               joint_pop.WeightedColFeats(sigma_joint)),
                          MixtureMarginals(joint_pop.members, sigma_joint, a));

  RunRecord record;
  recorder.FinishInto(record);
  record.total_steps_run = total;
  record.main_population = main_pop.members;
  record.counter_population = counter_pop.members;
  record.meta_weights = sigma_joint;
  record.counter_row_weights = sigma_main;
  record.counter_col_weights = sigma_counter;
  record.evaluated.members = joint_pop.members;
  record.evaluated.weights = sigma_joint;
  return record;
}

RunRecord RunTraining(const TeamGame& game, const TrainConfig& config,
                      const EvalFn& eval) {
  switch (config.algorithm) {
    case Algorithm::kSp: return RunSp(game, config, eval);
    case Algorithm::kFsp: return RunFsp(game, config, eval);
    case Algorithm::kPsro: return RunPsro(game, config, eval);
    case Algorithm::kOdo: return RunOdo(game, config, eval);
    case Algorithm::kFxp: return RunFxp(game, config, eval);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace crossplay
