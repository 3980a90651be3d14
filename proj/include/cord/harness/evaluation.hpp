// Copyright 2026 The CORD Authors.
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

#ifndef CORD_HARNESS_EVALUATION_HPP_
#define CORD_HARNESS_EVALUATION_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cord/harness/experiment_config.hpp"
#include "cord/harness/stats.hpp"
#include "cord/learner.hpp"

namespace cord::harness {

// Online networks restored from a checkpoint, with the config they were
// trained under.
struct Policy {
  ExperimentConfig config;
  std::uint64_t seed = 0;  // training seed of the run
  std::unique_ptr<Networks> networks;
};

Policy load_policy(const std::filesystem::path& checkpoint);

struct ReturnSummary {
  MeanStd stats;
  std::vector<double> returns;
};

// Greedy evaluation: epsilon 0, mean roles (MaxEnt keeps its uniform roles).
// Only environmental reward is accumulated.
ReturnSummary evaluate_returns(const Networks& nets, Method method, int role_period, const env::TeamSpec& base,
                               int episodes, std::uint64_t seed);

struct TeamEvaluation {
  std::map<int, ReturnSummary> by_size;
};

// Fully controlled teams of each size. Sizes above the entity capacity are a
// ConfigError.
TeamEvaluation eval_unseen_teams(const Networks& nets, Method method, int role_period,
                                 const std::vector<int>& team_sizes, int episodes, std::uint64_t seed);

struct AgentEvaluation {
  int team_size = 0;
  std::map<int, ReturnSummary> by_count;
  // Instrumentation: episodes actually run, keyed by the number of
  // learner-controlled agents found in each finished episode.
  std::map<int, int> episodes_per_count;
  MeanStd overall;  // pooled over all controlled counts
};

// Agents [0, c) are controlled, the rest follow `builtin`. Counts must lie in
// [1, team_size - 1]; an empty list means all of them.
AgentEvaluation eval_unseen_agents(const Networks& nets, Method method, int role_period, int team_size,
                                   std::vector<int> controlled_counts, int episodes, std::uint64_t seed,
                                   env::BuiltinPolicy builtin = env::BuiltinPolicy::kMixed);

// JSON reports consumed by emit_plots and the acceptance suite.
std::string to_json(const TeamEvaluation& eval, Method method, std::uint64_t seed);
std::string to_json(const AgentEvaluation& eval, Method method, std::uint64_t seed);

}  // namespace cord::harness

#endif  // CORD_HARNESS_EVALUATION_HPP_
