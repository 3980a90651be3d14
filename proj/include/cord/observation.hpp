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

#ifndef CORD_OBSERVATION_HPP_
#define CORD_OBSERVATION_HPP_

#include <cstdint>
#include <vector>

#include "cord/nn/autograd.hpp"

namespace cord {

// Masked, entity-structured snapshot of a team at one timestep.
//
// Agents occupy entity rows agent_entity[i]. Padded rows carry zero
// features and a cleared team_mask bit; an agent's visibility row is always
// a subset of team_mask.
struct EntityObservation {
  nn::Matrix entity_features;               // entities x feature_dim
  std::vector<std::uint8_t> team_mask;      // entities
  std::vector<std::uint8_t> obs_mask;       // agents x entities, row-major
  std::vector<int> agent_entity;            // agents
  std::vector<int> last_actions;            // agents
  nn::Matrix last_roles;                    // agents x role_dim (may be empty)

  int entity_count() const { return static_cast<int>(entity_features.rows()); }
  int agent_count() const { return static_cast<int>(agent_entity.size()); }
  int feature_dim() const { return static_cast<int>(entity_features.cols()); }
  bool visible(int agent, int entity) const {
    return obs_mask[static_cast<std::size_t>(agent) * entity_count() + entity] != 0;
  }
  bool exists(int entity) const { return team_mask[entity] != 0; }
};

// Throws ContractViolation if the masks are inconsistent.
void validate(const EntityObservation& obs);

}  // namespace cord

#endif  // CORD_OBSERVATION_HPP_
