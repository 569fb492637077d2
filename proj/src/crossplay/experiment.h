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

#ifndef CROSSPLAY_EXPERIMENT_H_
#define CROSSPLAY_EXPERIMENT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossplay/game.h"
#include "crossplay/games.h"
#include "crossplay/trainers.h"

namespace crossplay {

// A constructed game plus the metadata needed to evaluate and serialize runs.
struct GameBundle {
  std::string id;
  TeamGame game;
  std::optional<SadParams> sad;  // present for SAD games
};

// Game descriptor {"id": ..., "params": {...}}. Unknown ids and unknown
// parameter keys are rejected.
GameBundle MakeGameBundle(const nlohmann::json& config);
GameBundle MakeGameBundleFromString(const std::string& spec);

enum class EvalMetric { kTeamExploitability, kSadReference };

struct ExperimentConfig {
  nlohmann::json game;  // kept verbatim for summaries
  std::string algorithm_id;
  TrainConfig train;
  EvalMetric metric = EvalMetric::kTeamExploitability;
  std::vector<uint64_t> seeds;
  std::string output_dir;
};

// Parses and validates the experiment document
//   {"game", "algorithm", "seeds", "total_steps", "eval_every",
//    "output_dir", "convergence_threshold"},
// rejecting unknown fields at every level.
ExperimentConfig ParseExperimentConfig(const nlohmann::json& config);

EvalFn MakeEvalFn(const GameBundle& bundle, EvalMetric metric);

struct RunOutput {
  uint64_t seed = 0;
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
  RunRecord record;
};

// Executes every configured seed and writes, per run, a step/exploitability
// CSV and a JSON summary (convergence step or null, final exploitability,
// population sizes, final payoff table for population algorithms).
std::vector<RunOutput> RunExperiment(const ExperimentConfig& config);

// CSV serialization: fixed header, 17 significant digits, LF newlines.
void WriteRunCsv(const std::filesystem::path& path, const RunRecord& record);
std::string RunCsvString(const RunRecord& record);

nlohmann::json RunSummaryJson(const ExperimentConfig& config, uint64_t seed,
                              const GameBundle& bundle,
                              const RunRecord& record);

// Policy files: {"members": [[per-agent distributions], ...],
//                "weights": [...]}.
MixturePolicy ParsePolicyJson(const nlohmann::json& policy);
MixturePolicy LoadPolicyFile(const std::filesystem::path& path);
nlohmann::json PolicyToJson(const MixturePolicy& mixture);

}  // namespace crossplay

#endif  // CROSSPLAY_EXPERIMENT_H_
