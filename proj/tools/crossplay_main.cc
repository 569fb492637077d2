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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crossplay/elo.h"
#include "crossplay/experiment.h"
#include "crossplay/theorems.h"

namespace {

using nlohmann::json;

int RunCommand(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config: " << config_path << "\n";
    return 1;
  }
  json config;
  in >> config;
  const crossplay::ExperimentConfig experiment =
      crossplay::ParseExperimentConfig(config);
  const auto outputs = crossplay::RunExperiment(experiment);
  for (const auto& output : outputs) {
    std::cout << output.csv_path.string() << "\n"
              << output.summary_path.string() << "\n";
  }
  return 0;
}

int TournamentCommand(const std::string& game_spec,
                      const std::vector<std::string>& policy_paths) {
  const crossplay::GameBundle bundle =
      crossplay::MakeGameBundleFromString(game_spec);
  std::vector<crossplay::MixturePolicy> policies;
  for (const std::string& path : policy_paths) {
    crossplay::MixturePolicy policy = crossplay::LoadPolicyFile(path);
    bundle.game.ValidatePolicy(policy);
    policies.push_back(std::move(policy));
  }
  const auto scores = crossplay::TournamentScores(bundle.game, policies);
  const crossplay::EloTable table = crossplay::FitElo(scores);

  json report;
  report["game"] = bundle.id;
  report["policies"] = policy_paths;
  report["scores"] = scores;
  report["ratings"] = table.ratings;
  json fitted = json::array();
  const int n = static_cast<int>(policies.size());
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      row.push_back(table.expected_scores[i * n + j]);
    }
    fitted.push_back(std::move(row));
  }
  report["fitted_scores"] = std::move(fitted);
  std::cout << report.dump(2) << "\n";
  return 0;
}

int TheoremCommand(int which, int trials, uint64_t seed, int64_t steps) {
  crossplay::MotivatingParams params;
  json report;
  if (which == 1) {
    const crossplay::Theorem1Report result =
        crossplay::RunTheorem1Check(params, trials, steps, seed);
    report["theorem"] = 1;
    report["threshold"] = result.threshold;
    report["trials"] = result.trials;
    report["rules"] = json::array();
    for (crossplay::UpdateRule rule : crossplay::kPreferencePreservingRules) {
      report["rules"].push_back(crossplay::UpdateRuleToString(rule));
    }
    report["converged_to_global_ne"] = result.converged_runs;
    report["preference_violations"] = result.total_violations;
  } else {
    const crossplay::Theorem2Report result =
        crossplay::RunTheorem2Check(params, steps);
    report["theorem"] = 2;
    report["grid_size"] = result.grid.size();
    int sp_good = 0, mu_good = 0;
    for (bool g : result.sp_good) sp_good += g ? 1 : 0;
    for (bool g : result.fixed_opponent_good) mu_good += g ? 1 : 0;
    report["sp_good_count"] = sp_good;
    report["fixed_opponent_good_count"] = mu_good;
    report["subset_holds"] = result.subset_holds;
    report["strictly_larger"] = result.strictly_larger;
    report["special_point"] = result.special_point;
    report["special_point_in_difference"] =
        result.special_point_fixed_good && !result.special_point_sp_good;
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int ExploitCommand(const std::string& game_spec,
                   const std::string& policy_path) {
  const crossplay::GameBundle bundle =
      crossplay::MakeGameBundleFromString(game_spec);
  const crossplay::MixturePolicy policy =
      crossplay::LoadPolicyFile(policy_path);
  bundle.game.ValidatePolicy(policy);
  json report;
  report["game"] = bundle.id;
  report["policy"] = policy_path;
  report["team_exploitability"] =
      crossplay::TeamExploitability(bundle.game, policy);
  if (bundle.sad.has_value()) {
    report["sad_reference_exploitability"] =
        crossplay::SadExploitability(bundle.game, *bundle.sad, policy);
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and training loops for two-team zero-sum "
               "normal-form games"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run a config-driven experiment");
  run->add_option("config", config_path, "experiment JSON config")->required();

  std::string game_spec;
  std::vector<std::string> policy_paths;
  CLI::App* tournament = app.add_subcommand(
      "tournament", "Fit Elo ratings from exact pairwise scores");
  tournament->add_option("game", game_spec,
                         "game id (team_rps|motivating|sad) or descriptor "
                         "file")->required();
  tournament->add_option("policies", policy_paths, "policy JSON files")
      ->required()
      ->expected(2, -1);

  int which = 1;
  int trials = 100;
  uint64_t seed = 0;
  int64_t steps = 2000;
  CLI::App* theorem = app.add_subcommand(
      "theorem-check", "Empirical checks of the convergence claims");
  theorem->add_option("which", which, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  theorem->add_option("--trials", trials, "random initializations (theorem 1)");
  theorem->add_option("--seed", seed, "RNG seed");
  theorem->add_option("--steps", steps, "training steps per run");

  std::string exploit_game, exploit_policy;
  CLI::App* exploit = app.add_subcommand(
      "exploit", "Team exploitability of a policy file");
  exploit->add_option("game", exploit_game, "game id or descriptor file")
      ->required();
  exploit->add_option("policy", exploit_policy, "policy JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunCommand(config_path);
    if (tournament->parsed()) return TournamentCommand(game_spec, policy_paths);
    if (theorem->parsed()) return TheoremCommand(which, trials, seed, steps);
    if (exploit->parsed()) return ExploitCommand(exploit_game, exploit_policy);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
