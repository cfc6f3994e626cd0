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

#ifndef MINIMAX_DSAC_ACTOR_LOSSES_H_
#define MINIMAX_DSAC_ACTOR_LOSSES_H_

#include <Eigen/Dense>

#include "minimax_dsac/critic.h"
#include "minimax_dsac/policy.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac {

struct PolicyLossResult {
  double loss = 0.0;
  Eigen::VectorXd grads;
  // log pi of the freshly sampled actions (used by the temperature update).
  Eigen::VectorXd log_probs;
  // Mean critic std at the sampled actions.
  double mean_sigma = 0.0;
};

// Risk-averse protagonist objective, minimized:
//   mean_i [ alpha * log pi(a_i|s_i) - Q(s_i, a_i, u_i) + lambda * sigma(s_i, a_i, u_i) ]
// with a_i = tanh(mean + std * noise_i) and u_i the replayed adversary action.
// observations: 6 x B, adversary_actions: 2 x B, noise: 1 x B.
PolicyLossResult ProtagonistLossAndGrad(const StochasticPolicy& protagonist,
                                        const NetParams& critic,
                                        const Eigen::MatrixXd& observations,
                                        const Eigen::MatrixXd& adversary_actions,
                                        const Eigen::MatrixXd& noise, double alpha,
                                        double lambda, double sigma_min = kDefaultSigmaMin);
PolicyLossResult ProtagonistLossAndGrad(const StochasticPolicy& protagonist,
                                        const NetParams& critic,
                                        const Eigen::MatrixXd& observations,
                                        const Eigen::MatrixXd& adversary_actions, double alpha,
                                        double lambda, Rng& rng,
                                        double sigma_min = kDefaultSigmaMin);

// Risk-seeking adversary objective, minimized (no entropy term):
//   mean_i [ Q(s_i, a_i, u_i) - lambda * sigma(s_i, a_i, u_i) ]
// with u_i = tanh(mean + std * noise_i) and a_i the replayed protagonist action.
// observations: 6 x B, protagonist_actions: 1 x B, noise: 2 x B.
PolicyLossResult AdversaryLossAndGrad(const StochasticPolicy& adversary,
                                      const NetParams& critic,
                                      const Eigen::MatrixXd& observations,
                                      const Eigen::MatrixXd& protagonist_actions,
                                      const Eigen::MatrixXd& noise, double lambda,
                                      double sigma_min = kDefaultSigmaMin);
PolicyLossResult AdversaryLossAndGrad(const StochasticPolicy& adversary,
                                      const NetParams& critic,
                                      const Eigen::MatrixXd& observations,
                                      const Eigen::MatrixXd& protagonist_actions,
                                      double lambda, Rng& rng,
                                      double sigma_min = kDefaultSigmaMin);

// Entropy temperature, parameterized by log(alpha).
struct TemperatureState {
  double log_alpha = 0.0;
  double target_entropy = -1.0;

  double alpha() const;
};

struct TemperatureLossResult {
  double loss = 0.0;
  double grad_log_alpha = 0.0;
};

// loss = mean_i [ -alpha * (log_prob_i + target_entropy) ], gradient w.r.t. log(alpha).
TemperatureLossResult TemperatureLossAndGrad(const TemperatureState& state,
                                             const Eigen::VectorXd& log_probs);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_ACTOR_LOSSES_H_
