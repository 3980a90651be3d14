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

#ifndef CORD_REPLAY_HPP_
#define CORD_REPLAY_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

#include "cord/env/resource_collection.hpp"
#include "cord/nn/layers.hpp"

namespace cord {

// One collected episode. Observations are stored as world states and
// rebuilt on demand; they are a pure function of (state, last actions).
struct Episode {
  int n_agents = 0;
  std::vector<int> controlled;
  std::uint64_t seed = 0;  // environment seed; states can be replayed from it
  env::BuiltinPolicy builtin_policy = env::BuiltinPolicy::kMixed;
  std::vector<env::WorldState> states;         // state before action t
  std::vector<std::vector<int>> last_actions;  // a_{t-1} per agent
  std::vector<std::vector<int>> actions;       // a_t per agent
  std::vector<double> env_rewards;
  std::vector<std::uint8_t> terminal;
  std::vector<std::uint8_t> role_assigned;  // roles (re)drawn at step t
  std::vector<nn::Matrix> roles;            // roles held during step t (agents x role_dim)
  std::vector<nn::Matrix> role_noise;       // standard-normal draw used at assignment steps

  int length() const { return static_cast<int>(actions.size()); }
  EntityObservation observation(int t) const;
  // Role held before step t (zero at t = 0).
  nn::Matrix previous_roles(int t) const;
};

// Throws ContractViolation unless the episode is internally consistent.
void validate(const Episode& episode);

// Minibatch of whole episodes, ragged episodes masked by `valid`.
struct EpisodeBatch {
  std::vector<std::shared_ptr<const Episode>> episodes;
  int max_length = 0;
  std::vector<std::vector<std::uint8_t>> valid;  // [episode][t]

  int transitions() const;
  static EpisodeBatch from(std::vector<std::shared_ptr<const Episode>> episodes);
};

// Episode-level FIFO replay memory with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void add(std::shared_ptr<const Episode> episode);
  // Uniformly samples whole episodes with replacement until the batch holds
  // at least `min_transitions` steps.
  EpisodeBatch sample(int min_transitions, nn::Rng& rng) const;
  // Uniformly samples exactly `episodes` episodes with replacement.
  EpisodeBatch sample_episodes(int episodes, nn::Rng& rng) const;

  std::size_t size() const { return episodes_.size(); }
  std::size_t capacity() const { return capacity_; }
  const Episode& at(std::size_t i) const { return *episodes_[i]; }

 private:
  std::size_t capacity_;
  std::deque<std::shared_ptr<const Episode>> episodes_;
};

}  // namespace cord

#endif  // CORD_REPLAY_HPP_
