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

#ifndef CORD_HARNESS_STATS_HPP_
#define CORD_HARNESS_STATS_HPP_

#include <span>

namespace cord::harness {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  int count = 0;
};

MeanStd mean_std(std::span<const double> values);

struct WilcoxonResult {
  double w_plus = 0.0;  // sum of ranks of positive differences
  int n = 0;            // non-zero differences
  double p_value = 1.0;
};

// Exact one-sided signed-rank test of H1: x tends to exceed y, paired by
// index. Zero differences are dropped; tied magnitudes get average ranks and
// the null distribution is enumerated over all sign assignments.
WilcoxonResult wilcoxon_signed_rank_greater(std::span<const double> x, std::span<const double> y);

}  // namespace cord::harness

#endif  // CORD_HARNESS_STATS_HPP_
