// Copyright 2026 The minimax_dsac Authors.
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

#ifndef MINIMAX_DSAC_POLICY_H_
#define MINIMAX_DSAC_POLICY_H_

#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/mlp.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac {

struct PolicyOptions {
  double log_std_min = -5.0;
  double log_std_max = 2.0;
};

// observation (6) -> [action means (dim), raw log-stds (dim)].
Architecture PolicyArchitecture(int action_dim, std::vector<int> hidden_widths,
                                Activation activation = Activation::kGelu);

// Tanh-squashed diagonal Gaussian policy. A pre-squash sample
// x = mean + std * noise is mapped to the normalized action tanh(x) and to
// the physical action action_scale * tanh(x).
class StochasticPolicy {
 public:
  StochasticPolicy(NetParams params, Eigen::VectorXd action_scale,
                   PolicyOptions options = {});

  int action_dim() const { return static_cast<int>(action_scale_.size()); }
  const NetParams& params() const { return params_; }
  NetParams& mutable_params() { return params_; }
  const Eigen::VectorXd& action_scale() const { return action_scale_; }
  const PolicyOptions& options() const { return options_; }

 private:
  NetParams params_;
  Eigen::VectorXd action_scale_;
  PolicyOptions options_;
};

struct ActionSample {
  Eigen::VectorXd physical;
  Eigen::VectorXd normalized;
  double log_prob = 0.0;
};

// Reparameterized sample for a given standard-normal noise vector. log_prob
// is the density of the normalized action, including the tanh
// change-of-variables term, summed over action dimensions.
ActionSample SampleAction(const StochasticPolicy& policy,
                          const Eigen::VectorXd& observation,
                          const Eigen::VectorXd& noise);
ActionSample SampleAction(const StochasticPolicy& policy,
                          const Eigen::VectorXd& observation, Rng& rng);

// Normalized tanh(mean); used for evaluation.
Eigen::VectorXd DeterministicAction(const StochasticPolicy& policy,
                                    const Eigen::VectorXd& observation);

// log pi(normalized_action | observation). Inverse of the squashing map;
// normalized components must lie strictly inside (-1, 1).
double LogProbOfNormalized(const StochasticPolicy& policy,
                           const Eigen::VectorXd& observation,
                           const Eigen::VectorXd& normalized_action);

// Batched sample with everything needed to backpropagate through it.
// Matrices are action_dim x batch.
struct PolicyBatchSample {
  Eigen::MatrixXd noise;
  Eigen::MatrixXd mean;
  Eigen::MatrixXd log_std;      // after clamping
  Eigen::MatrixXd log_std_pass;  // 1 where the clamp is inactive, else 0
  Eigen::MatrixXd std;
  Eigen::MatrixXd pre_squash;
  Eigen::MatrixXd normalized;
  Eigen::VectorXd log_prob;
  ForwardCache cache;
};

PolicyBatchSample SamplePolicyBatch(const StochasticPolicy& policy,
                                    const Eigen::MatrixXd& observations,
                                    const Eigen::MatrixXd& noise);

Eigen::MatrixXd StandardNormalMatrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Parameter gradient of sum_i [ entropy_coef * log_prob_i + g(normalized_i) ]
// where normalized_grads holds dg/d(normalized action) for every sample.
Eigen::VectorXd PolicyBackward(const StochasticPolicy& policy,
                               const PolicyBatchSample& sample,
                               const Eigen::MatrixXd& normalized_grads,
                               double entropy_coef);

// log(1 - tanh(x)^2) without cancellation for large |x|.
double LogOneMinusTanhSquared(double x);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_POLICY_H_
