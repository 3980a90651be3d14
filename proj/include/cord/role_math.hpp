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

#ifndef CORD_ROLE_MATH_HPP_
#define CORD_ROLE_MATH_HPP_

#include <span>

#include <Eigen/Core>

namespace cord {

// Diagonal Gaussian over the role space.
struct RoleGaussian {
  Eigen::VectorXd mean;
  Eigen::VectorXd log_std;

  int dim() const { return static_cast<int>(mean.size()); }
  Eigen::VectorXd std() const { return log_std.array().exp(); }
};

// Pairwise role similarity, entries exp(-symmetric KL).
struct AffinityMatrix {
  Eigen::MatrixXd entries;
  int agent_count() const { return static_cast<int>(entries.rows()); }
};

// Closed-form KL(p || q) summed over dimensions.
double gaussian_kl(const RoleGaussian& p, const RoleGaussian& q);
double symmetric_kl(const RoleGaussian& p, const RoleGaussian& q);

AffinityMatrix affinity_matrix(std::span<const RoleGaussian> posteriors);

// Determinant of the affinity matrix, clamped to [0, 1]. The exponentiated
// KL kernel is not guaranteed positive semidefinite, so a negative
// determinant counts as fully redundant roles.
double diversity_reward(const AffinityMatrix& affinity);

// Mean over `batch_size` samples of the per-agent KL sums between the
// influence-conditioned posterior and the do-baseline. Both spans are laid
// out sample-major and must have equal length divisible by batch_size.
double causal_reward(std::span<const RoleGaussian> posteriors, std::span<const RoleGaussian> baselines,
                     int batch_size);

double gaussian_entropy(const RoleGaussian& p);

// Entropy of a full-covariance joint Gaussian,
// (N/2) log(2 pi e) + (1/2) log|covariance|. Requires a positive-definite
// covariance.
double joint_gaussian_entropy(const Eigen::MatrixXd& covariance);
bool is_positive_definite(const Eigen::MatrixXd& m);

// r = r_e + lambda_c * r_c + lambda_d * r_d
double shape_reward(double env_reward, double causal, double diversity, double lambda_c, double lambda_d);

void validate(const RoleGaussian& g);

}  // namespace cord

#endif  // CORD_ROLE_MATH_HPP_
