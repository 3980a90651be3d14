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

#ifndef CORD_NN_ADAM_HPP_
#define CORD_NN_ADAM_HPP_

#include <cstdint>
#include <vector>

#include "cord/nn/layers.hpp"

namespace cord::nn {

struct AdamOptions {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // Global gradient-norm clip; non-positive disables clipping.
  double max_grad_norm = 10.0;
};

class Adam {
 public:
  Adam(ParameterList params, AdamOptions options);

  // Applies one update from the accumulated gradients and returns the
  // pre-clip global gradient norm.
  double step();
  void zero_grad();

  const ParameterList& parameters() const { return params_; }
  std::int64_t steps() const { return steps_; }

  // Moment buffers, exposed for checkpointing.
  std::vector<Matrix>& first_moments() { return m_; }
  std::vector<Matrix>& second_moments() { return v_; }
  void set_steps(std::int64_t steps) { steps_ = steps; }

 private:
  ParameterList params_;
  AdamOptions options_;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
  std::int64_t steps_ = 0;
};

}  // namespace cord::nn

#endif  // CORD_NN_ADAM_HPP_
