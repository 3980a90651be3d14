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

#ifndef CORD_NN_LAYERS_HPP_
#define CORD_NN_LAYERS_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cord/nn/autograd.hpp"

namespace cord::nn {

using Rng = std::mt19937_64;

struct NamedParameter {
  std::string name;
  Var var;
};
using ParameterList = std::vector<NamedParameter>;

// Fully connected layer y = x W + b, W stored as (in x out).
class Linear {
 public:
  Linear() = default;
  Linear(int in_features, int out_features, Rng& rng);

  Var operator()(const Var& x) const;
  void collect(const std::string& prefix, ParameterList& out) const;

  int in_features() const { return static_cast<int>(weight_.rows()); }
  int out_features() const { return static_cast<int>(weight_.cols()); }
  Var& weight() { return weight_; }
  Var& bias() { return bias_; }

 private:
  Var weight_;
  Var bias_;
};

// Multi-head attention with learned query/key/value/output projections.
class MultiHeadAttention {
 public:
  MultiHeadAttention() = default;
  MultiHeadAttention(int width, int heads, Rng& rng);

  Var operator()(const Var& query_inputs, const Var& key_inputs,
                 std::shared_ptr<const AttentionLayout> layout,
                 AttentionWeights* weights_out = nullptr) const;
  void collect(const std::string& prefix, ParameterList& out) const;
  int heads() const { return heads_; }

 private:
  int heads_ = 1;
  Linear query_;
  Linear key_;
  Linear value_;
  Linear output_;
};

// Gated recurrent unit cell.
class GruCell {
 public:
  GruCell() = default;
  GruCell(int input_size, int hidden_size, Rng& rng);

  Var operator()(const Var& x, const Var& h) const;
  void collect(const std::string& prefix, ParameterList& out) const;
  int hidden_size() const { return hidden_; }

 private:
  int hidden_ = 0;
  Linear input_gates_;
  Linear hidden_gates_;
};

std::size_t parameter_count(const ParameterList& params);
// Copies values from `from` into `to`; names and shapes must match.
void copy_parameters(const ParameterList& from, const ParameterList& to);

}  // namespace cord::nn

#endif  // CORD_NN_LAYERS_HPP_
