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

#ifndef CORD_AGENT_NETWORKS_HPP_
#define CORD_AGENT_NETWORKS_HPP_

#include <cstdint>
#include <vector>

#include "cord/model_config.hpp"
#include "cord/nn/layers.hpp"
#include "cord/team_batch.hpp"

namespace cord {

// Low-level agent utility: attention over the agent's own visible entities,
// a recurrent core for the trajectory embedding, and a Q head conditioned on
// the assigned role.
class UtilityNetwork {
 public:
  UtilityNetwork(const ModelConfig& config, nn::Rng& rng);

  // Per-step input features of every packed agent (decentralized: an agent
  // only sees entities in its own visibility mask).
  nn::Var encode(const TeamBatch& batch) const;
  nn::Var recur(const nn::Var& inputs, const nn::Var& hidden) const;
  // Q^i(tau^i, c_i) for every action; rows are agents.
  nn::Var q_values(const nn::Var& hidden, const nn::Var& roles) const;
  nn::Var initial_hidden(int rows) const;

  void collect(const std::string& prefix, nn::ParameterList& out) const;
  const ModelConfig& config() const { return config_; }

 private:
  ModelConfig config_;
  nn::Linear entity_;
  nn::MultiHeadAttention attention_;
  nn::Linear input_;
  nn::GruCell gru_;
  nn::Linear q_hidden_;
  nn::Linear q_out_;
};

// Monotonic attention mixer: hypernetworks conditioned on the entity state
// produce non-negative per-agent weights, so dQ_tot/dQ^i >= 0.
class MixingNetwork {
 public:
  MixingNetwork(const ModelConfig& config, nn::Rng& rng);

  // agent_q is (agents x 1); returns (samples x 1).
  nn::Var forward(const TeamBatch& batch, const nn::Var& agent_q) const;

  void collect(const std::string& prefix, nn::ParameterList& out) const;
  // Disables the absolute value on hypernetwork weights. Only for audits.
  void set_enforce_monotonic(bool on) { enforce_monotonic_ = on; }

 private:
  ModelConfig config_;
  bool enforce_monotonic_ = true;
  nn::Linear entity_;
  nn::MultiHeadAttention attention_;
  nn::Linear weight1_;
  nn::Linear bias1_;
  nn::Linear weight2_;
  nn::Linear value_hidden_;
  nn::Linear value_out_;
};

// Row-major availability flags (agents x actions); empty means all available.
using AvailableActions = std::vector<std::uint8_t>;

std::vector<int> greedy_actions(const nn::Matrix& utilities, const AvailableActions& available = {});
// Independent epsilon-greedy per agent row; exploration is uniform over
// available actions.
std::vector<int> select_actions(const nn::Matrix& utilities, double epsilon, nn::Rng& rng,
                                const AvailableActions& available = {});

}  // namespace cord

#endif  // CORD_AGENT_NETWORKS_HPP_
