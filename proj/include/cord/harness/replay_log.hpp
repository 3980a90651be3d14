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

#ifndef CORD_HARNESS_REPLAY_LOG_HPP_
#define CORD_HARNESS_REPLAY_LOG_HPP_

#include <filesystem>
#include <ostream>
#include <vector>

#include "cord/rollout.hpp"

namespace cord::harness {

// One JSON object per step:
// {"episode":e,"t":t,"state_hash":h,"joint_action":[...],"r_e":x,"r_c":x,"r_d":x}
void write_replay_records(std::ostream& out, std::int64_t episode, const std::vector<StepRecord>& records);

struct ReplayLine {
  std::int64_t episode = 0;
  StepRecord record;
};

std::vector<ReplayLine> read_replay_log(const std::filesystem::path& path);

}  // namespace cord::harness

#endif  // CORD_HARNESS_REPLAY_LOG_HPP_
