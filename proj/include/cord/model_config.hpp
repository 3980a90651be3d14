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

#ifndef CORD_MODEL_CONFIG_HPP_
#define CORD_MODEL_CONFIG_HPP_

namespace cord {

// Network sizes shared by the controller, utility and mixing networks.
struct ModelConfig {
  int feature_dim = 12;
  int n_actions = 5;
  int role_dim = 8;
  int embed_dim = 128;  // controller width
  int heads = 4;
  int utility_dim = 64;  // recurrent width of the agent utility
  int mixer_dim = 32;
  double min_log_std = -5.0;
  double max_log_std = 2.0;
};

}  // namespace cord

#endif  // CORD_MODEL_CONFIG_HPP_
