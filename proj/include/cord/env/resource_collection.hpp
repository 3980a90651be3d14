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

#ifndef CORD_ENV_RESOURCE_COLLECTION_HPP_
#define CORD_ENV_RESOURCE_COLLECTION_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cord/observation.hpp"

namespace cord::env {

constexpr int kGridSize = 12;
constexpr int kEpisodeLimit = 145;
constexpr int kMaxAgents = 8;
constexpr int kResourceTypes = 3;
constexpr int kResourcesPerType = 3;
constexpr int kMaxResources = kResourceTypes * kResourcesPerType;
constexpr int kInvaderPeriod = 20;
constexpr int kMaxInvaders = kEpisodeLimit / kInvaderPeriod;
constexpr int kMaxEntities = kMaxAgents + kMaxResources + kMaxInvaders + 1;
constexpr int kNumActions = 5;
constexpr int kVisibilityRadius = 2;

// Feature layout of one entity row.
constexpr int kFeatIsAgent = 0;
constexpr int kFeatIsResource = 1;
constexpr int kFeatIsInvader = 2;
constexpr int kFeatIsHome = 3;
constexpr int kFeatX = 4;
constexpr int kFeatY = 5;
constexpr int kFeatResourceType = 6;  // three slots
constexpr int kFeatCarried = 9;       // three slots
constexpr int kFeatureDim = 12;

// Entity row offsets.
constexpr int kAgentRow0 = 0;
constexpr int kResourceRow0 = kMaxAgents;
constexpr int kInvaderRow0 = kResourceRow0 + kMaxResources;
constexpr int kHomeRow = kInvaderRow0 + kMaxInvaders;

enum Action : int { kNoOp = 0, kUp = 1, kDown = 2, kLeft = 3, kRight = 4 };

// kNone or a resource colour 0..2.
constexpr int kNone = -1;

enum class BuiltinPolicy { kGreedyCollector, kInvaderChaser, kMixed };

std::string to_string(BuiltinPolicy policy);
BuiltinPolicy builtin_policy_from_string(const std::string& name);

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

int manhattan(Cell a, Cell b);
int chebyshev(Cell a, Cell b);
Cell apply_move(Cell c, int action);

struct TeamSpec {
  int n_agents = 2;
  std::vector<int> controlled;  // learner-controlled agent indices
  BuiltinPolicy builtin_policy = BuiltinPolicy::kMixed;
  std::uint64_t seed = 0;

  bool is_controlled(int agent) const;
  // Spec with every agent learner-controlled.
  static TeamSpec all_controlled(int n_agents, std::uint64_t seed);
};

struct AgentState {
  Cell pos;
  int carried = kNone;
};

struct ResourceState {
  Cell pos;
  int type = 0;
  bool alive = true;
};

struct InvaderState {
  Cell pos;
  bool alive = false;
};

struct WorldState {
  std::vector<AgentState> agents;
  std::vector<ResourceState> resources;
  std::vector<InvaderState> invaders;  // one slot per spawn, in spawn order
  Cell home;
  int step_count = 0;
};

struct StepInfo {
  int deposits = 0;
  int intercepts = 0;
  int breaches = 0;
};

struct StepResult {
  EntityObservation observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

struct RewardConfig {
  double deposit = 5.0;
  double intercept = 3.0;
  double breach = -10.0;
};

class ResourceCollection {
 public:
  explicit ResourceCollection(RewardConfig rewards = {});

  EntityObservation reset(const TeamSpec& spec);
  StepResult step(const std::vector<int>& joint_action);

  EntityObservation observe() const;
  const WorldState& state() const { return state_; }
  WorldState& mutable_state() { return state_; }
  const TeamSpec& spec() const { return spec_; }
  bool done() const { return state_.step_count >= kEpisodeLimit; }
  // 64-bit FNV-1a hash of the full world state.
  std::uint64_t state_hash() const;
  // Episode totals since reset.
  const StepInfo& totals() const { return totals_; }

 private:
  void move_invaders();
  double resolve_interceptions(StepInfo& info);
  void spawn_invader();

  RewardConfig rewards_;
  TeamSpec spec_;
  WorldState state_;
  StepInfo totals_;
  std::vector<int> last_actions_;
  std::mt19937_64 rng_;
};

// Scripted teammate used for the unseen-agent protocol. Deterministic in
// the state; ties between equally good moves go to the lower action index.
int builtin_action(const WorldState& state, int agent, BuiltinPolicy policy);

// Feature row for the given world; exposed for observation cross-checks.
EntityObservation build_observation(const WorldState& state, const std::vector<int>& last_actions);

}  // namespace cord::env

#endif  // CORD_ENV_RESOURCE_COLLECTION_HPP_
