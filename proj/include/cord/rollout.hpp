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

#ifndef CORD_ROLLOUT_HPP_
#define CORD_ROLLOUT_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "cord/env/resource_collection.hpp"
#include "cord/learner.hpp"
#include "cord/replay.hpp"

namespace cord {

struct RolloutOptions {
  Method method = Method::kCord;
  int role_period = 5;
  RoleSampling role_sampling = RoleSampling::kStochastic;
  // Exploration rate as a function of the global environment step.
  std::function<double(std::int64_t)> epsilon = [](std::int64_t) { return 0.0; };
  std::int64_t step_offset = 0;
  // Audit every influence-attention pass (normalization and masking).
  bool audit_attention = false;
};

// One line of the episode-replay log.
struct StepRecord {
  int t = 0;
  std::uint64_t state_hash = 0;
  std::vector<int> joint_action;
  double env_reward = 0.0;
  double causal = 0.0;
  double diversity = 0.0;
};

struct RolloutResult {
  std::shared_ptr<Episode> episode;
  std::vector<StepRecord> records;
  double env_return = 0.0;
  double mean_causal = 0.0;
  double mean_diversity = 0.0;
  env::StepInfo totals;
  int attention_checks = 0;
};

// Plays one episode with the given (read-only) networks. Builtin agents act
// by script; learner-controlled agents act epsilon-greedily on their
// utilities. The controller sees the whole team, builtins included.
RolloutResult run_episode(const Networks& nets, const env::TeamSpec& spec, const RolloutOptions& options,
                          nn::Rng& rng);

// Linear anneal from `start` to `end` over `steps`, then constant.
std::function<double(std::int64_t)> linear_epsilon(double start, double end, std::int64_t steps);

// Throws ContractViolation if the captured influence weights are not a
// normalized distribution over existing teammates.
void check_influence_attention(const nn::AttentionWeights& weights, const TeamBatch& batch);

}  // namespace cord

#endif  // CORD_ROLLOUT_HPP_
