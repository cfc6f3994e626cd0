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

#include "minimax_dsac/critic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "minimax_dsac/errors.h"

namespace minimax_dsac {
namespace {

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

}  // namespace

Eigen::VectorXd CriticInput::Flatten() const {
  Eigen::VectorXd v(kCriticInputDim);
  v << observation, protagonist_action, adversary_action;
  return v;
}

Architecture CriticArchitecture(std::vector<int> hidden_widths, Activation activation) {
  return {kCriticInputDim, std::move(hidden_widths), 2, activation};
}

double StdFromRaw(double raw, double sigma_min) { return sigma_min + Softplus(raw); }

GaussianReturn CriticForward(const NetParams& critic, const CriticInput& input,
                             double sigma_min) {
  const Eigen::VectorXd out = MlpForward(critic, input.Flatten());
  if (out.size() != 2) throw std::invalid_argument("critic must output (mean, raw std)");
  if (!out.allFinite()) throw NonFiniteError("critic produced a non-finite output");
  return {out[0], StdFromRaw(out[1], sigma_min)};
}

Eigen::MatrixXd AssembleCriticInputs(const Eigen::MatrixXd& observations,
                                     const Eigen::MatrixXd& protagonist_actions,
                                     const Eigen::MatrixXd& adversary_actions) {
  const Eigen::Index batch = observations.cols();
  if (observations.rows() != kObservationDim ||
      protagonist_actions.rows() != kProtagonistActionDim ||
      adversary_actions.rows() != kAdversaryActionDim ||
      protagonist_actions.cols() != batch || adversary_actions.cols() != batch) {
    throw std::invalid_argument("critic inputs must be 6+1+2 rows with a common batch");
  }
  Eigen::MatrixXd inputs(kCriticInputDim, batch);
  inputs << observations, protagonist_actions, adversary_actions;
  return inputs;
}

CriticBatchOutput CriticForwardBatch(const NetParams& critic, const Eigen::MatrixXd& inputs,
                                     double sigma_min) {
  if (critic.architecture().output_width != 2) {
    throw std::invalid_argument("critic must output (mean, raw std)");
  }
  CriticBatchOutput out;
  const Eigen::MatrixXd raw = MlpForwardBatch(critic, inputs, &out.cache);
  out.mean = raw.row(0).transpose();
  out.raw_std = raw.row(1).transpose();
  out.std = out.raw_std.unaryExpr([sigma_min](double r) { return StdFromRaw(r, sigma_min); });
  return out;
}

MlpBatchGradients CriticBackward(const NetParams& critic, const CriticBatchOutput& output,
                                 const Eigen::VectorXd& mean_grads,
                                 const Eigen::VectorXd& std_grads, bool want_param_grads) {
  Eigen::MatrixXd out_grads(2, mean_grads.size());
  out_grads.row(0) = mean_grads.transpose();
  out_grads.row(1) =
      std_grads.cwiseProduct(output.raw_std.unaryExpr([](double r) { return Sigmoid(r); }))
          .transpose();
  return MlpBackwardBatch(critic, output.cache, out_grads, want_param_grads);
}

double TdTarget(const TargetModels& targets, const Transition& t,
                const BellmanOptions& options, Rng& rng) {
  if (t.done) return t.reward;
  const Eigen::VectorXd next_obs = t.next_observation;
  const ActionSample a = SampleAction(targets.protagonist, next_obs, rng);
  Eigen::Vector2d u;
  if (targets.adversary != nullptr) {
    u = SampleAction(*targets.adversary, next_obs, rng).normalized;
  } else {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    u[0] = uniform(rng);
    u[1] = uniform(rng);
  }
  CriticInput next{t.next_observation, a.normalized[0], u};
  const GaussianReturn z = CriticForward(targets.critic, next, options.sigma_min);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sample = z.mean + z.std * normal(rng);
  return t.reward + options.gamma * (sample - options.alpha * a.log_prob);
}

Eigen::VectorXd TdTargetBatch(const TargetModels& targets,
                              std::span<const Transition> transitions,
                              const BellmanOptions& options, Rng& rng) {
  const Eigen::Index batch = static_cast<Eigen::Index>(transitions.size());
  Eigen::MatrixXd next_obs(kObservationDim, batch);
  for (Eigen::Index i = 0; i < batch; ++i) next_obs.col(i) = transitions[i].next_observation;

  const PolicyBatchSample a = SamplePolicyBatch(
      targets.protagonist, next_obs, StandardNormalMatrix(kProtagonistActionDim, batch, rng));
  Eigen::MatrixXd u(kAdversaryActionDim, batch);
  if (targets.adversary != nullptr) {
    u = SamplePolicyBatch(*targets.adversary, next_obs,
                          StandardNormalMatrix(kAdversaryActionDim, batch, rng))
            .normalized;
  } else {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (Eigen::Index i = 0; i < batch; ++i) {
      u(0, i) = uniform(rng);
      u(1, i) = uniform(rng);
    }
  }
  const CriticBatchOutput z = CriticForwardBatch(
      targets.critic, AssembleCriticInputs(next_obs, a.normalized, u), options.sigma_min);
  const Eigen::MatrixXd xi = StandardNormalMatrix(1, batch, rng);

  Eigen::VectorXd y(batch);
  for (Eigen::Index i = 0; i < batch; ++i) {
    const Transition& t = transitions[i];
    if (t.done) {
      y[i] = t.reward;
      continue;
    }
    const double sample = z.mean[i] + z.std[i] * xi(0, i);
    y[i] = t.reward + options.gamma * (sample - options.alpha * a.log_prob[i]);
  }
  return y;
}

double ClipTarget(double y, double q_current, double bound) {
  return std::min(std::max(y, q_current - bound), q_current + bound);
}

double GaussianNll(double y, double mean, double std) {
  const double z = (y - mean) / std;
  return 0.5 * z * z + std::log(std) + kHalfLogTwoPi;
}

namespace {

LossAndGrad NllLossAndGrad(const NetParams& critic, const CriticBatchOutput& out,
                           const Eigen::VectorXd& targets) {
  const Eigen::Index batch = out.mean.size();
  Eigen::VectorXd mean_grads(batch);
  Eigen::VectorXd std_grads(batch);
  double loss = 0.0;
  const double inv_batch = 1.0 / static_cast<double>(batch);
  for (Eigen::Index i = 0; i < batch; ++i) {
    const double s = out.std[i];
    const double diff = targets[i] - out.mean[i];
    const double nll = GaussianNll(targets[i], out.mean[i], s);
    if (!std::isfinite(nll)) {
      throw NonFiniteError("critic loss is non-finite at batch index " + std::to_string(i),
                           static_cast<long>(i));
    }
    loss += nll;
    mean_grads[i] = -diff / (s * s) * inv_batch;
    std_grads[i] = (1.0 / s - diff * diff / (s * s * s)) * inv_batch;
  }
  LossAndGrad result;
  result.loss = loss * inv_batch;
  result.grads = CriticBackward(critic, out, mean_grads, std_grads, true).param_grads;
  return result;
}

void CheckBatch(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets) {
  if (inputs.cols() == 0) throw std::invalid_argument("critic loss needs a non-empty batch");
  if (targets.size() != inputs.cols()) {
    throw std::invalid_argument("critic loss: one target per input column required");
  }
}

}  // namespace

LossAndGrad CriticLossAndGrad(const NetParams& critic, const Eigen::MatrixXd& inputs,
                              const Eigen::VectorXd& targets, double sigma_min) {
  CheckBatch(inputs, targets);
  return NllLossAndGrad(critic, CriticForwardBatch(critic, inputs, sigma_min), targets);
}

ClippedCriticLoss ClippedCriticLossAndGrad(const NetParams& critic, const Eigen::MatrixXd& inputs,
                                           const Eigen::VectorXd& raw_targets, double bound,
                                           double sigma_min) {
  CheckBatch(inputs, raw_targets);
  if (!(bound > 0.0)) throw std::invalid_argument("clipping bound must be positive");
  const CriticBatchOutput out = CriticForwardBatch(critic, inputs, sigma_min);
  ClippedCriticLoss result;
  result.q_current = out.mean;
  result.clipped_targets.resize(raw_targets.size());
  for (Eigen::Index i = 0; i < raw_targets.size(); ++i) {
    result.clipped_targets[i] = ClipTarget(raw_targets[i], out.mean[i], bound);
  }
  result.loss = NllLossAndGrad(critic, out, result.clipped_targets);
  return result;
}

}  // namespace minimax_dsac
