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

#ifndef CORD_HARNESS_TRAINING_HPP_
#define CORD_HARNESS_TRAINING_HPP_

#include <cstdint>
#include <filesystem>
#include <map>

#include "cord/harness/experiment_config.hpp"
#include "cord/harness/stats.hpp"

namespace cord::harness {

struct TrainingSummary {
  std::filesystem::path run_dir;
  std::int64_t env_steps = 0;
  std::int64_t episodes = 0;
  bool resumed = false;
  // Greedy return on each training team size after the last update.
  std::map<int, MeanStd> final_by_size;
  MeanStd final_return;
};

// Trains one (method, seed) run into `run_dir`:
//   config.txt     resolved configuration
//   metrics.jsonl  one record per episode, evaluation and final summary
//   curve.csv      step,method,seed,return,r_c,r_d at every evaluation
//   replay.jsonl   per-step episode replay log (when replay_log is on)
//   checkpoint.bin learner, replay buffer, counters and RNG state
//   summary.json   final training return
// With `resume`, an existing checkpoint is restored and the run continues
// on the same RNG stream; outputs are truncated back to the checkpoint.
TrainingSummary run_training(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& run_dir,
                             bool resume = false);

}  // namespace cord::harness

#endif  // CORD_HARNESS_TRAINING_HPP_
