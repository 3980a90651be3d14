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

#ifndef CORD_CHECKPOINT_HPP_
#define CORD_CHECKPOINT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include "cord/learner.hpp"
#include "cord/nn/autograd.hpp"

namespace cord {

// Versioned key-value container written as a single binary file.
//
// Layout (little-endian):
//   "CORDCKPT" | u32 version | u32 entry_count
//   entry: u32 key_length | key bytes | u8 kind | payload
//     kind 0 (matrix): u64 rows | u64 cols | rows*cols f64, row-major
//     kind 1 (int):    i64
//     kind 2 (text):   u64 length | bytes
class CheckpointArchive {
 public:
  static constexpr std::uint32_t kVersion = 1;
  using Entry = std::variant<nn::Matrix, std::int64_t, std::string>;

  void put(const std::string& key, Entry value);
  bool contains(const std::string& key) const { return entries_.count(key) != 0; }
  const nn::Matrix& matrix(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

  void save(const std::filesystem::path& path) const;
  static CheckpointArchive load(const std::filesystem::path& path);

 private:
  std::map<std::string, Entry> entries_;
};

// Writes the learner's parameter sections (controller, utility, mixing,
// targets), optimizer state and counters.
void store_learner(const Learner& learner, CheckpointArchive& archive);
void restore_learner(const CheckpointArchive& archive, Learner& learner);

// Episodes are stored as (seed, policy, actions, roles at assignment steps);
// world states are rebuilt by replaying the environment.
void store_replay(const ReplayBuffer& buffer, CheckpointArchive& archive);
void restore_replay(const CheckpointArchive& archive, ReplayBuffer& buffer);

std::string serialize_rng(const nn::Rng& rng);
nn::Rng deserialize_rng(const std::string& text);

}  // namespace cord

#endif  // CORD_CHECKPOINT_HPP_
