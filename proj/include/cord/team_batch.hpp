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

#ifndef CORD_TEAM_BATCH_HPP_
#define CORD_TEAM_BATCH_HPP_

#include <memory>
#include <span>
#include <vector>

#include "cord/nn/autograd.hpp"
#include "cord/observation.hpp"

namespace cord {

// Packs a list of team observations into compact row blocks so a single
// forward pass can process many (episode, timestep) samples at once.
// Only existing entities are packed; padding rows never reach a network.
struct TeamBatch {
  int samples = 0;
  nn::Var entity_features;                 // packed entities x feature_dim
  std::vector<int> sample_entity_offset;   // samples + 1
  std::vector<int> sample_agent_offset;    // samples + 1
  std::vector<int> agent_entity_row;       // packed agent -> packed entity row
  std::vector<int> agent_sample;           // packed agent -> sample
  std::vector<std::uint8_t> lonely;        // packed agent has no teammates

  // Mean over each agent's visible entities (agents x entities).
  std::shared_ptr<const nn::SparseMatrix> observation_pool;
  // Mean over each sample's entities (samples x entities).
  std::shared_ptr<const nn::SparseMatrix> entity_mean;
  // Sum over each sample's agents (samples x agents).
  std::shared_ptr<const nn::SparseMatrix> agent_sum;

  // Agent -> all agents of its sample.
  std::shared_ptr<const nn::AttentionLayout> team_layout;
  // Agent -> other agents of its sample (self excluded).
  std::shared_ptr<const nn::AttentionLayout> influence_layout;
  // Agent -> entities it can see.
  std::shared_ptr<const nn::AttentionLayout> visibility_layout;
  // Agent -> every entity of its sample.
  std::shared_ptr<const nn::AttentionLayout> state_layout;

  nn::Var last_action_onehot;  // agents x n_actions
  nn::Matrix last_roles;       // agents x role_dim

  int agent_count() const { return static_cast<int>(agent_entity_row.size()); }
  int entity_count() const { return static_cast<int>(entity_features.rows()); }
  int agent_row(int sample, int agent) const { return sample_agent_offset[sample] + agent; }
  int agents_in(int sample) const { return sample_agent_offset[sample + 1] - sample_agent_offset[sample]; }

  static TeamBatch build(std::span<const EntityObservation* const> observations, int n_actions, int role_dim);
  static TeamBatch build(const EntityObservation& observation, int n_actions, int role_dim);
};

}  // namespace cord

#endif  // CORD_TEAM_BATCH_HPP_
