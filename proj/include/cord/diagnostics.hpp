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

#ifndef CORD_DIAGNOSTICS_HPP_
#define CORD_DIAGNOSTICS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cord/controller.hpp"
#include "cord/learner.hpp"
#include "cord/observation.hpp"
#include "cord/role_math.hpp"

namespace cord::diagnostics {

enum class Status { kPass, kFail, kSkipped };

struct DiagnosticReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  Status status = Status::kFail;
  std::string detail;
  std::map<std::string, double> extras;

  bool passed() const { return status == Status::kPass; }
};

std::string to_string(Status status);
std::string to_json(const std::vector<DiagnosticReport>& reports);

// Monte-Carlo joint KL of the product posteriors against the product
// baselines, compared with the sum of per-agent closed-form KLs.
DiagnosticReport check_lemma3_factorization(std::span<const RoleGaussian> posteriors,
                                            std::span<const RoleGaussian> baselines, std::uint64_t seed,
                                            int samples = 1000000, double tolerance = 0.02);
DiagnosticReport check_lemma3_factorization(int n_agents, std::uint64_t seed, int role_dim = 8,
                                            int samples = 1000000, double tolerance = 0.02);

// Monte-Carlo entropy of N(0, covariance) against
// (N/2) log(2 pi e) + (1/2) log|covariance|. Skipped when the covariance is
// not positive definite.
DiagnosticReport check_lemma2_entropy(const Eigen::MatrixXd& covariance, std::uint64_t seed, int samples = 1000000,
                                      double tolerance = 0.02);
DiagnosticReport check_lemma2_entropy(int n, std::uint64_t seed, int samples = 1000000, double tolerance = 0.02);

// For every (sample, agent) query q in the batch, the influence vectors of
// all batch rows define a uniform mixture P(c|q) = mean_k P(c|I_k, q).
// Estimates H(P(c|q)) and I(c; I | q) by Monte Carlo on independent draws,
// takes the mean posterior entropy in closed form, and reports
// residual = H - (I + H(c|I,q)) against a bootstrap standard error.
// Extras include the do-baseline surrogate mean KL(P(c|I,q) || P(c|I_0,q)).
DiagnosticReport check_theorem1_budget(const Controller& controller,
                                       std::span<const EntityObservation> observations, std::uint64_t seed,
                                       int samples_per_query = 20000, int bootstrap = 200, double sigmas = 3.0);

// Randomized finite-difference partials dQ_tot/dQ_i over fresh mixers and
// random environment states with 1..6 agents.
DiagnosticReport audit_monotonic_mixing(int trials, std::uint64_t seed, bool enforce_monotonic = true,
                                        double step = 1e-4, double tolerance = 1e-8);

// Analytic TD-loss gradient against central differences for every parameter
// of the tiny model (2 agents, role dim 2, width 8), targets held fixed.
DiagnosticReport check_gradients(std::uint64_t seed, double step = 1e-4, double tolerance = 1e-3);

// Runs smoke rollouts totalling at least `steps` environment steps with the
// attention audit enabled and fails on any malformed attention row.
DiagnosticReport audit_attention_rollout(int steps, std::uint64_t seed);

// The full suite used by the `diagnose` verb.
std::vector<DiagnosticReport> run_all(std::uint64_t seed);

// Observations from random-action episodes with 2..4 agents.
std::vector<EntityObservation> sample_observations(int count, std::uint64_t seed, int role_dim = 8);

}  // namespace cord::diagnostics

#endif  // CORD_DIAGNOSTICS_HPP_
