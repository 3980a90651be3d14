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

#ifndef CORD_LEARNER_HPP_
#define CORD_LEARNER_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cord/agent_networks.hpp"
#include "cord/controller.hpp"
#include "cord/model_config.hpp"
#include "cord/nn/adam.hpp"
#include "cord/replay.hpp"

namespace cord {

enum class Method { kCord, kCordNoI, kMaxEnt };

std::string to_string(Method method);
Method method_from_string(const std::string& name);

struct LearnerConfig {
  ModelConfig model;
  Method method = Method::kCord;
  double gamma = 0.99;
  double lambda_c = 0.001;
  double lambda_d = 0.001;
  double learning_rate = 3e-4;
  double max_grad_norm = 10.0;
  int role_period = 5;
  // Backpropagate the TD loss into the controller through sampled roles.
  bool role_grad = true;
  int target_period_episodes = 200;

  // Intrinsic weights actually applied: zero for the ablations.
  double effective_lambda_c() const { return method == Method::kCord ? lambda_c : 0.0; }
  double effective_lambda_d() const { return method == Method::kCord ? lambda_d : 0.0; }
};

// Controller, agent utility and mixer; one instance each for the online
// and the target parameters.
struct Networks {
  Networks(const ModelConfig& config, nn::Rng& rng);

  Controller controller;
  UtilityNetwork utility;
  MixingNetwork mixer;

  nn::ParameterList controller_parameters() const;
  nn::ParameterList utility_parameters() const;
  nn::ParameterList mixer_parameters() const;
  nn::ParameterList parameters() const;
};

// Every intermediate of one learner pass over an EpisodeBatch. Samples are
// packed time-major: for each t, the episodes still running at t.
struct BatchEvaluation {
  std::vector<std::pair<int, int>> samples;  // (episode, t)
  nn::Var q_tot;                  // samples x 1, online, taken actions
  nn::Var agent_q;                // packed agents x actions, online
  nn::Matrix target_next;         // samples x 1, target Q_tot at the next step (0 when terminal)
  nn::Matrix targets;             // samples x 1
  nn::Matrix env_rewards;         // samples x 1
  nn::Matrix shaped_rewards;      // samples x 1
  nn::Matrix causal;              // samples x 1, r_c held over the role period
  nn::Matrix diversity;           // samples x 1, r_d held over the role period
  std::vector<int> next_actions;  // online argmax per packed agent row
  double batch_causal = 0.0;      // causal_reward with M = assignment samples
  double batch_diversity = 0.0;
};

struct UpdateStats {
  double loss = 0.0;
  double grad_norm = 0.0;
  double causal = 0.0;
  double diversity = 0.0;
  double mean_q = 0.0;
};

nn::Var td_loss(const nn::Var& q_tot, const nn::Matrix& targets);

// y = r + gamma * (1 - terminal) * next
nn::Matrix td_targets(const nn::Matrix& rewards, const std::vector<std::uint8_t>& terminal,
                      const nn::Matrix& next_value, double gamma);

class Learner {
 public:
  Learner(LearnerConfig config, std::uint64_t seed);

  BatchEvaluation evaluate(const EpisodeBatch& batch) const;
  UpdateStats train(const EpisodeBatch& batch);

  // Counts a finished training episode; copies online -> target every
  // target_period_episodes.
  void on_training_episode();
  void update_targets();

  const LearnerConfig& config() const { return config_; }
  Networks& online() { return *online_; }
  const Networks& online() const { return *online_; }
  Networks& target() { return *target_; }
  const Networks& target() const { return *target_; }
  nn::Adam& optimizer() { return *optimizer_; }

  std::int64_t training_episodes() const { return training_episodes_; }
  std::int64_t episodes_since_target_update() const { return since_target_update_; }
  void set_counters(std::int64_t training_episodes, std::int64_t since_target_update);

 private:
  LearnerConfig config_;
  std::unique_ptr<Networks> online_;
  std::unique_ptr<Networks> target_;
  std::unique_ptr<nn::Adam> optimizer_;
  std::int64_t training_episodes_ = 0;
  std::int64_t since_target_update_ = 0;
};

}  // namespace cord

#endif  // CORD_LEARNER_HPP_
