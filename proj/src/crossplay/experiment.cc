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

#include "crossplay/experiment.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "crossplay/meta.h"

namespace crossplay {

using nlohmann::json;

namespace {

void RejectUnknownKeys(const json& object, const std::set<std::string>& known,
                       const std::string& where) {
  if (!object.is_object()) {
    throw std::invalid_argument(where + " must be a JSON object");
  }
  for (const auto& [key, value] : object.items()) {
    if (!known.count(key)) {
      throw std::invalid_argument("unknown field \"" + key + "\" in " + where);
    }
  }
}

void RequireKeys(const json& object, const std::set<std::string>& required,
                 const std::string& where) {
  for (const std::string& key : required) {
    if (!object.contains(key)) {
      throw std::invalid_argument("missing field \"" + key + "\" in " + where);
    }
  }
}

}  // namespace

GameBundle MakeGameBundle(const json& config) {
  RejectUnknownKeys(config, {"id", "params"}, "game");
  RequireKeys(config, {"id"}, "game");
  const std::string id = config.at("id").get<std::string>();
  const json params = config.value("params", json::object());

  if (id == "team_rps") {
    RejectUnknownKeys(params, {}, "team_rps params");
    return GameBundle{id, MakeTeamRps(), std::nullopt};
  }
  if (id == "motivating") {
    RejectUnknownKeys(params, {"team_size", "C", "eps"}, "motivating params");
    MotivatingParams p;
    p.team_size = params.value("team_size", p.team_size);
    p.bonus = params.value("C", p.bonus);
    p.eps = params.value("eps", p.eps);
    return GameBundle{id, MakeMotivating(p), std::nullopt};
  }
  if (id == "sad") {
    RejectUnknownKeys(params, {"team_size", "max_seek", "rewards"},
                      "sad params");
    SadParams p;
    p.team_size = params.value("team_size", p.team_size);
    p.max_seek = params.value("max_seek", p.max_seek);
    if (params.contains("rewards")) {
      p.rewards = params.at("rewards").get<std::vector<double>>();
    }
    return GameBundle{id, MakeSad(p), p};
  }
  if (id == "matrix") {
    RejectUnknownKeys(params,
                      {"team_size", "action_count", "utility", "symmetric"},
                      "matrix params");
    RequireKeys(params, {"team_size", "action_count", "utility"},
                "matrix params");
    const int team_size = params.at("team_size").get<int>();
    const int action_count = params.at("action_count").get<int>();
    const json& rows = params.at("utility");
    if (!rows.is_array()) {
      throw std::invalid_argument("matrix utility must be a nested array");
    }
    std::vector<double> table;
    for (const json& row : rows) {
      if (!row.is_array()) {
        throw std::invalid_argument("matrix utility must be a nested array");
      }
      for (const json& value : row) table.push_back(value.get<double>());
    }
    return GameBundle{id,
                      MakeMatrixGame(team_size, action_count, std::move(table),
                                     params.value("symmetric", false)),
                      std::nullopt};
  }
  throw std::invalid_argument("unknown game id: " + id);
}

GameBundle MakeGameBundleFromString(const std::string& spec) {
  if (spec == "team_rps" || spec == "motivating" || spec == "sad") {
    return MakeGameBundle(json{{"id", spec}});
  }
  // Otherwise a path to a game descriptor file.
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open game file: " + spec);
  json config;
  in >> config;
  return MakeGameBundle(config);
}

namespace {

InitMode InitModeFromString(const std::string& name) {
  if (name == "uniform") return InitMode::kUniform;
  if (name == "random") return InitMode::kRandom;
  throw std::invalid_argument("unknown init mode: " + name);
}

}  // namespace

ExperimentConfig ParseExperimentConfig(const json& config) {
  RejectUnknownKeys(config,
                    {"game", "algorithm", "seeds", "total_steps", "eval_every",
                     "output_dir", "convergence_threshold"},
                    "experiment config");
  RequireKeys(config,
              {"game", "algorithm", "seeds", "total_steps", "eval_every",
               "output_dir", "convergence_threshold"},
              "experiment config");

  ExperimentConfig out;
  out.game = config.at("game");
  (void)MakeGameBundle(out.game);  // validate eagerly

  const json& algorithm = config.at("algorithm");
  RejectUnknownKeys(algorithm, {"id", "rule", "hyperparams"}, "algorithm");
  RequireKeys(algorithm, {"id"}, "algorithm");
  out.algorithm_id = algorithm.at("id").get<std::string>();
  out.train.algorithm = AlgorithmFromString(out.algorithm_id);
  out.train.rule =
      UpdateRuleFromString(algorithm.value("rule", "stepwise_br"));

  const json hp = algorithm.value("hyperparams", json::object());
  RejectUnknownKeys(
      hp,
      {"lr", "eta", "eta_decay", "steps_per_iter", "meta_solver",
       "counter_solver", "psro_reset", "counter_reset", "main_reset",
       "use_plateau", "plateau_tol", "plateau_window", "init", "metric",
       "eval_average", "nash_tol", "forel_base_lr", "replicator_dt", "mwu_k"},
      "hyperparams");
  out.train.lr = hp.value("lr", out.train.lr);
  out.train.eta = hp.value("eta", out.train.eta);
  out.train.eta_decay = hp.value("eta_decay", out.train.eta_decay);
  out.train.steps_per_iter =
      hp.value("steps_per_iter", out.train.steps_per_iter);
  if (hp.contains("meta_solver")) {
    out.train.meta_solver =
        MetaSolverFromString(hp.at("meta_solver").get<std::string>());
  }
  if (hp.contains("counter_solver")) {
    out.train.counter_solver =
        MetaSolverFromString(hp.at("counter_solver").get<std::string>());
  }
  out.train.psro_reset = hp.value("psro_reset", out.train.psro_reset);
  out.train.counter_reset = hp.value("counter_reset", out.train.counter_reset);
  out.train.main_reset = hp.value("main_reset", out.train.main_reset);
  out.train.use_plateau = hp.value("use_plateau", out.train.use_plateau);
  out.train.plateau_tol = hp.value("plateau_tol", out.train.plateau_tol);
  out.train.plateau_window =
      hp.value("plateau_window", out.train.plateau_window);
  if (hp.contains("init")) {
    out.train.init = InitModeFromString(hp.at("init").get<std::string>());
  }
  out.train.nash_tol = hp.value("nash_tol", out.train.nash_tol);
  out.train.forel_base_lr = hp.value("forel_base_lr", out.train.forel_base_lr);
  out.train.replicator_dt = hp.value("replicator_dt", out.train.replicator_dt);
  out.train.mwu_k = hp.value("mwu_k", out.train.mwu_k);

  // FSP reports the time average by construction; CFR follows the same
  // average-policy convention unless explicitly overridden.
  out.train.eval_average = hp.value(
      "eval_average", out.train.rule == UpdateRule::kCfr &&
                          out.train.algorithm == Algorithm::kSp);

  if (hp.contains("metric")) {
    const std::string metric = hp.at("metric").get<std::string>();
    if (metric == "team_exploitability") {
      out.metric = EvalMetric::kTeamExploitability;
    } else if (metric == "sad_reference") {
      out.metric = EvalMetric::kSadReference;
    } else {
      throw std::invalid_argument("unknown metric: " + metric);
    }
  }

  out.train.total_steps = config.at("total_steps").get<int64_t>();
  out.train.eval_every = config.at("eval_every").get<int64_t>();
  out.train.convergence_threshold =
      config.at("convergence_threshold").get<double>();
  out.seeds = config.at("seeds").get<std::vector<uint64_t>>();
  if (out.seeds.empty()) {
    throw std::invalid_argument("seeds must be a non-empty list");
  }
  out.output_dir = config.at("output_dir").get<std::string>();
  out.train.Validate();
  return out;
}

EvalFn MakeEvalFn(const GameBundle& bundle, EvalMetric metric) {
  if (metric == EvalMetric::kTeamExploitability) {
    return TeamExploitabilityEval();
  }
  if (!bundle.sad.has_value()) {
    throw std::invalid_argument(
        "sad_reference metric requires the sad game");
  }
  const SadReferencePolicies refs = MakeSadReferencePolicies(*bundle.sad);
  std::vector<std::vector<double>> ref_feats;
  for (const ProductPolicy* ref : {&refs.seek, &refs.attack, &refs.defend}) {
    ref_feats.push_back(bundle.game.RowFeatureExpectation(*ref));
  }
  return [ref_feats](const TeamGame& game, std::span<const double> /*row*/,
                     std::span<const double> col_feats) {
    double total = 0.0;
    for (const std::vector<double>& f : ref_feats) {
      double u = 0.0;
      for (int k = 0; k < game.rank(); ++k) u += f[k] * col_feats[k];
      total += std::max(0.0, u);
    }
    return total;
  };
}

namespace {

std::string FormatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string RunCsvString(const RunRecord& record) {
  std::string out = "step,exploitability";
  const size_t num_marginals =
      record.points.empty() ? 0 : record.points.front().marginals.size();
  for (size_t i = 0; i < num_marginals; ++i) {
    out += ",agent" + std::to_string(i) + "_p1";
  }
  out += "\n";
  for (const EvalPoint& point : record.points) {
    out += std::to_string(point.step);
    out += ",";
    out += FormatDouble(point.exploitability);
    for (double m : point.marginals) {
      out += ",";
      out += FormatDouble(m);
    }
    out += "\n";
  }
  return out;
}

void WriteRunCsv(const std::filesystem::path& path, const RunRecord& record) {
  std::ofstream out(path, std::ios::binary);  // LF on every platform
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << RunCsvString(record);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

json PayoffTableJson(const TeamGame& game,
                     const std::vector<ProductPolicy>& rows,
                     const std::vector<std::string>& row_ids,
                     const std::vector<ProductPolicy>& cols,
                     const std::vector<std::string>& col_ids) {
  const PayoffTable table = FillPayoffs(game, rows, cols);
  json matrix = json::array();
  for (int r = 0; r < table.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < table.cols; ++c) row.push_back(table.at(r, c));
    matrix.push_back(std::move(row));
  }
  return json{{"row_ids", row_ids}, {"col_ids", col_ids},
              {"matrix", std::move(matrix)}};
}

std::vector<std::string> NumberedIds(const std::string& prefix, size_t n) {
  std::vector<std::string> ids;
  for (size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

}  // namespace

json RunSummaryJson(const ExperimentConfig& config, uint64_t seed,
                    const GameBundle& bundle, const RunRecord& record) {
  json summary;
  summary["game"] = config.game;
  summary["algorithm"] = config.algorithm_id;
  summary["rule"] = UpdateRuleToString(config.train.rule);
  summary["seed"] = seed;
  summary["total_steps"] = record.total_steps_run;
  if (record.convergence_step.has_value()) {
    summary["convergence_step"] = *record.convergence_step;
  } else {
    summary["convergence_step"] = nullptr;
  }
  summary["final_exploitability"] = record.final_exploitability();
  summary["population_sizes"] = {
      {"main", record.main_population.size()},
      {"counter", record.counter_population.size()}};
  if (config.train.algorithm == Algorithm::kPsro ||
      config.train.algorithm == Algorithm::kOdo) {
    summary["payoff_table"] = PayoffTableJson(
        bundle.game, record.main_population,
        NumberedIds("main_", record.main_population.size()),
        record.main_population,
        NumberedIds("main_", record.main_population.size()));
    summary["meta_weights"] = record.meta_weights;
  } else if (config.train.algorithm == Algorithm::kFxp) {
    summary["payoff_table"] = PayoffTableJson(
        bundle.game, record.main_population,
        NumberedIds("main_", record.main_population.size()),
        record.counter_population,
        NumberedIds("counter_", record.counter_population.size()));
    summary["meta_weights"] = record.meta_weights;
    summary["sigma_main"] = record.counter_row_weights;
    summary["sigma_counter"] = record.counter_col_weights;
  }
  return summary;
}

std::vector<RunOutput> RunExperiment(const ExperimentConfig& config) {
  const GameBundle bundle = MakeGameBundle(config.game);
  const EvalFn eval = MakeEvalFn(bundle, config.metric);
  std::filesystem::create_directories(config.output_dir);

  std::vector<RunOutput> outputs;
  for (uint64_t seed : config.seeds) {
    TrainConfig train = config.train;
    train.seed = seed;
    RunOutput output;
    output.seed = seed;
    output.record = RunTraining(bundle.game, train, eval);

    const std::string stem = config.algorithm_id + "_" +
                             UpdateRuleToString(train.rule) + "_seed" +
                             std::to_string(seed);
    output.csv_path = std::filesystem::path(config.output_dir) / (stem + ".csv");
    output.summary_path =
        std::filesystem::path(config.output_dir) / (stem + ".json");
    WriteRunCsv(output.csv_path, output.record);

    std::ofstream summary_out(output.summary_path, std::ios::binary);
    if (!summary_out) {
      throw std::runtime_error("cannot open for writing: " +
                               output.summary_path.string());
    }
    summary_out << RunSummaryJson(config, seed, bundle, output.record).dump(2)
                << "\n";
    summary_out.flush();
    outputs.push_back(std::move(output));
  }
  return outputs;
}

MixturePolicy ParsePolicyJson(const json& policy) {
  RejectUnknownKeys(policy, {"members", "weights"}, "policy");
  RequireKeys(policy, {"members", "weights"}, "policy");
  MixturePolicy mixture;
  for (const json& member : policy.at("members")) {
    ProductPolicy product;
    for (const json& dist : member) {
      product.dists.push_back(dist.get<std::vector<double>>());
    }
    mixture.members.push_back(std::move(product));
  }
  mixture.weights = policy.at("weights").get<std::vector<double>>();
  if (mixture.members.size() != mixture.weights.size()) {
    throw std::invalid_argument("policy members/weights length mismatch");
  }
  return mixture;
}

MixturePolicy LoadPolicyFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open policy file: " + path.string());
  }
  json policy;
  in >> policy;
  return ParsePolicyJson(policy);
}

json PolicyToJson(const MixturePolicy& mixture) {
  json members = json::array();
  for (const ProductPolicy& member : mixture.members) {
    json dists = json::array();
    for (const auto& dist : member.dists) dists.push_back(dist);
    members.push_back(std::move(dists));
  }
  return json{{"members", std::move(members)}, {"weights", mixture.weights}};
}

}  // namespace crossplay
