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

#ifndef CORD_HARNESS_EXPERIMENT_CONFIG_HPP_
#define CORD_HARNESS_EXPERIMENT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cord/env/resource_collection.hpp"
#include "cord/learner.hpp"

namespace cord::harness {

struct ExperimentConfig {
  Method method = Method::kCord;
  std::vector<int> train_team_sizes{2, 3, 4};
  double lambda_c = 0.001;
  double lambda_d = 0.001;
  std::int64_t total_steps = 300000;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::int64_t eval_every = 10000;
  int eval_episodes = 32;
  int role_period = 5;
  double gamma = 0.99;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  std::int64_t epsilon_anneal_steps = 50000;
  int buffer_capacity = 5000;
  int target_period = 200;
  int batch_transitions = 256;
  double learning_rate = 3e-4;
  double max_grad_norm = 10.0;
  bool role_grad = true;
  std::int64_t checkpoint_every = 50000;
  bool replay_log = false;
  env::BuiltinPolicy builtin_policy = env::BuiltinPolicy::kMixed;
  int role_dim = 8;
  int embed_dim = 128;
  int heads = 4;
  int utility_dim = 64;
  int mixer_dim = 32;
  std::string output_dir = "runs";

  LearnerConfig learner_config() const;
};

// Throws ConfigError on any violated invariant.
void validate(const ExperimentConfig& config);

// Flat "key = value" text; '#' starts a comment, lists are comma separated.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
// Applies one key/value pair; unknown keys are a ConfigError.
void set_field(ExperimentConfig& config, const std::string& key, const std::string& value);
// Every resolved field, one per line, in parseable form.
std::string to_text(const ExperimentConfig& config);

// Output root: $CORD_RUN_DIR when set, otherwise config.output_dir.
std::filesystem::path output_root(const ExperimentConfig& config);
std::filesystem::path run_directory(const ExperimentConfig& config, std::uint64_t seed);

}  // namespace cord::harness

#endif  // CORD_HARNESS_EXPERIMENT_CONFIG_HPP_
