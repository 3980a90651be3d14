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

#ifndef CORD_CONTROLLER_HPP_
#define CORD_CONTROLLER_HPP_

#include <random>
#include <span>
#include <vector>

#include "cord/model_config.hpp"
#include "cord/nn/layers.hpp"
#include "cord/observation.hpp"
#include "cord/role_math.hpp"
#include "cord/team_batch.hpp"

namespace cord {

// Graph-level outputs of one controller pass over a TeamBatch. Rows are
// packed agents.
struct ControllerOutput {
  nn::Var observation;    // o_t^i embedding
  nn::Var query;          // q_t^i
  nn::Var keys;           // k_t^j
  nn::Var values;         // v_t^j
  nn::Var influence;      // influence vector
  nn::Var posterior_mean;
  nn::Var posterior_log_std;
  nn::Var baseline_mean;
  nn::Var baseline_log_std;
  nn::AttentionWeights influence_weights;  // one block per sample and head

  RoleGaussian posterior(int row) const;
  RoleGaussian baseline(int row) const;
};

// Per-agent view of the influence attention.
struct InfluenceBundle {
  Eigen::VectorXd query;
  Eigen::MatrixXd keys;    // agents x width (all agents of the team)
  Eigen::MatrixXd values;  // agents x width
  // weights(h, j): attention of head h on agent j; zero for j == i and for
  // agents outside the team.
  Eigen::MatrixXd weights;
  Eigen::VectorXd influence;
};

enum class RoleSampling { kStochastic, kMean };

// High-level controller: encodes the team, computes each agent's influence
// vector by attending over the other agents, and emits the posterior role
// Gaussian together with the do-baseline evaluated at the constant I_0.
class Controller {
 public:
  Controller(const ModelConfig& config, nn::Rng& rng);

  ControllerOutput forward(const TeamBatch& batch, bool capture_weights = false) const;

  // Role head evaluated on explicit query / influence rows.
  std::pair<nn::Var, nn::Var> head(const nn::Var& query, const nn::Var& influence) const;

  Eigen::VectorXd encode_query(const EntityObservation& obs, int agent) const;
  InfluenceBundle influence_vector(const EntityObservation& obs, int agent) const;
  RoleGaussian posterior(const Eigen::VectorXd& influence, const Eigen::VectorXd& query) const;
  RoleGaussian do_baseline(const Eigen::VectorXd& query) const;

  const Eigen::VectorXd& baseline_influence() const { return baseline_influence_; }
  void set_baseline_influence(Eigen::VectorXd i0);

  void collect(const std::string& prefix, nn::ParameterList& out) const;
  nn::ParameterList parameters() const;
  const ModelConfig& config() const { return config_; }

 private:
  nn::Var baseline_rows(Eigen::Index rows) const;

  ModelConfig config_;
  Eigen::VectorXd baseline_influence_;
  nn::Linear entity_;
  nn::Linear observation_;
  nn::Linear action_;
  nn::MultiHeadAttention team_attention_;
  nn::Linear query_;
  nn::Linear key_;
  nn::Linear value_;
  nn::Linear head_hidden_;
  nn::Linear head_mean_;
  nn::Linear head_log_std_;
};

// Reparameterized draw c = mean + std * noise, or the mean.
std::vector<Eigen::VectorXd> sample_roles(std::span<const RoleGaussian> posteriors, RoleSampling mode,
                                          nn::Rng& rng);

}  // namespace cord

#endif  // CORD_CONTROLLER_HPP_
