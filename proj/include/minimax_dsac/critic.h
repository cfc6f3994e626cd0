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

#ifndef MINIMAX_DSAC_CRITIC_H_
#define MINIMAX_DSAC_CRITIC_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/mlp.h"
#include "minimax_dsac/policy.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac {

inline constexpr double kDefaultSigmaMin = 1e-3;

// Gaussian return distribution Z(s, a, u) ~ N(mean, std^2).
struct GaussianReturn {
  double mean = 0.0;
  double std = 1.0;
};

struct CriticInput {
  Observation observation = Observation::Zero();
  double protagonist_action = 0.0;
  Eigen::Vector2d adversary_action = Eigen::Vector2d::Zero();

  Eigen::VectorXd Flatten() const;
};

// [observation (6), protagonist action (1), adversary action (2)] -> [mean, raw std].
Architecture CriticArchitecture(std::vector<int> hidden_widths,
                                Activation activation = Activation::kGelu);

// std = sigma_min + softplus(raw).
double StdFromRaw(double raw, double sigma_min);

GaussianReturn CriticForward(const NetParams& critic, const CriticInput& input,
                             double sigma_min = kDefaultSigmaMin);

// Stacks column-wise observations (6 x B), protagonist actions (1 x B) and
// adversary actions (2 x B) into critic inputs (9 x B).
Eigen::MatrixXd AssembleCriticInputs(const Eigen::MatrixXd& observations,
                                     const Eigen::MatrixXd& protagonist_actions,
                                     const Eigen::MatrixXd& adversary_actions);

struct CriticBatchOutput {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;
  Eigen::VectorXd raw_std;
  ForwardCache cache;
};

CriticBatchOutput CriticForwardBatch(const NetParams& critic, const Eigen::MatrixXd& inputs,
                                     double sigma_min = kDefaultSigmaMin);

// Backpropagates per-sample cotangents on (mean, std) through the critic.
MlpBatchGradients CriticBackward(const NetParams& critic, const CriticBatchOutput& output,
                                 const Eigen::VectorXd& mean_grads,
                                 const Eigen::VectorXd& std_grads, bool want_param_grads);

// Target networks used to build the soft Bellman target. A null adversary
// means the scripted training adversary: u' ~ Uniform[-1, 1]^2.
struct TargetModels {
  const NetParams& critic;
  const StochasticPolicy& protagonist;
  const StochasticPolicy* adversary = nullptr;
};

struct BellmanOptions {
  double alpha = 0.0;
  double gamma = 0.99;
  double sigma_min = kDefaultSigmaMin;
};

// r if the transition is terminal, otherwise r + gamma * (z' - alpha * log pi(a'|s'))
// with a' ~ pi_target(.|s'), u' ~ adversary(.|s'), z' ~ Z_target(.|s', a', u').
double TdTarget(const TargetModels& targets, const Transition& transition,
                const BellmanOptions& options, Rng& rng);
Eigen::VectorXd TdTargetBatch(const TargetModels& targets,
                              std::span<const Transition> transitions,
                              const BellmanOptions& options, Rng& rng);

// Clamp y to [q_current - bound, q_current + bound].
double ClipTarget(double y, double q_current, double bound);

struct LossAndGrad {
  double loss = 0.0;
  Eigen::VectorXd grads;
};

// Mean Gaussian negative log-likelihood of the (already clipped) targets
// under the critic, and its exact parameter gradient. Targets are constants.
// Throws NonFiniteError naming the first offending sample.
LossAndGrad CriticLossAndGrad(const NetParams& critic, const Eigen::MatrixXd& inputs,
                              const Eigen::VectorXd& targets,
                              double sigma_min = kDefaultSigmaMin);

double GaussianNll(double y, double mean, double std);

struct ClippedCriticLoss {
  LossAndGrad loss;
  Eigen::VectorXd q_current;       // critic means before the update
  Eigen::VectorXd clipped_targets;  // in [q_current - bound, q_current + bound]
};

// Clips raw targets around the critic's current means, then evaluates
// CriticLossAndGrad on them, sharing one forward pass.
ClippedCriticLoss ClippedCriticLossAndGrad(const NetParams& critic, const Eigen::MatrixXd& inputs,
                                           const Eigen::VectorXd& raw_targets, double bound,
                                           double sigma_min = kDefaultSigmaMin);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_CRITIC_H_
