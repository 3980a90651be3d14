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

#ifndef CORD_HARNESS_PLOTS_HPP_
#define CORD_HARNESS_PLOTS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace cord::harness {

struct CurveRow {
  std::int64_t step = 0;
  std::string method;
  std::uint64_t seed = 0;
  double ret = 0.0;
  double causal = 0.0;
  double diversity = 0.0;
};

std::vector<CurveRow> read_curve_csv(const std::filesystem::path& path);
void write_curve_csv(const std::filesystem::path& path, const std::vector<CurveRow>& rows);

struct PlotOutputs {
  std::filesystem::path curves_csv;
  std::filesystem::path learning_curve;
  std::filesystem::path generalization_csv;
  std::filesystem::path teams_bars;   // empty when no unseen-team reports exist
  std::filesystem::path agents_bars;  // empty when no unseen-agent reports exist
};

// Collects curve.csv plus any eval_teams.json / eval_agents_<n>.json from
// each run directory and renders SVG charts with mean +- 1 std over seeds.
// Output depends only on the file contents.
PlotOutputs emit_plots(const std::vector<std::filesystem::path>& run_dirs, const std::filesystem::path& out_dir);

}  // namespace cord::harness

#endif  // CORD_HARNESS_PLOTS_HPP_
