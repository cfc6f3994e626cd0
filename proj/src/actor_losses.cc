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

#include "minimax_dsac/actor_losses.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "minimax_dsac/errors.h"

namespace minimax_dsac {
namespace {

void CheckFinite(const PolicyLossResult& r, const char* who) {
  if (!std::isfinite(r.loss)) throw NonFiniteError(std::string(who) + " loss is non-finite");
  for (Eigen::Index i = 0; i < r.log_probs.size(); ++i) {
    if (!std::isfinite(r.log_probs[i])) {
      throw NonFiniteError(std::string(who) + " log-probability is non-finite at batch index " +
                               std::to_string(i),
                           static_cast<long>(i));
    }
  }
  if (!r.grads.allFinite()) throw NonFiniteError(std::string(who) + " gradient is non-finite");
}

}  // namespace

PolicyLossResult ProtagonistLossAndGrad(const StochasticPolicy& protagonist,
                                        const NetParams& critic,
                                        const Eigen::MatrixXd& observations,
                                        const Eigen::MatrixXd& adversary_actions,
                                        const Eigen::MatrixXd& noise, double alpha,
                                        double lambda, double sigma_min) {
  const Eigen::Index batch = observations.cols();
  if (batch == 0) throw std::invalid_argument("protagonist loss needs a non-empty batch");
  const PolicyBatchSample sample = SamplePolicyBatch(protagonist, observations, noise);
  const CriticBatchOutput z = CriticForwardBatch(
      critic, AssembleCriticInputs(observations, sample.normalized, adversary_actions),
      sigma_min);

  const double inv_batch = 1.0 / static_cast<double>(batch);
  PolicyLossResult result;
  result.loss =
      (alpha * sample.log_prob - z.mean + lambda * z.std).sum() * inv_batch;
  result.log_probs = sample.log_prob;
  result.mean_sigma = z.std.mean();

  const Eigen::VectorXd mean_grads = Eigen::VectorXd::Constant(batch, -inv_batch);
  const Eigen::VectorXd std_grads = Eigen::VectorXd::Constant(batch, lambda * inv_batch);
  const MlpBatchGradients through_critic =
      CriticBackward(critic, z, mean_grads, std_grads, /*want_param_grads=*/false);
  const Eigen::MatrixXd action_grads =
      through_critic.input_grads.middleRows(kObservationDim, kProtagonistActionDim);
  result.grads = PolicyBackward(protagonist, sample, action_grads, alpha * inv_batch);
  CheckFinite(result, "protagonist");
  return result;
}

PolicyLossResult ProtagonistLossAndGrad(const StochasticPolicy& protagonist,
                                        const NetParams& critic,
                                        const Eigen::MatrixXd& observations,
                                        const Eigen::MatrixXd& adversary_actions, double alpha,
                                        double lambda, Rng& rng, double sigma_min) {
  return ProtagonistLossAndGrad(
      protagonist, critic, observations, adversary_actions,
      StandardNormalMatrix(protagonist.action_dim(), observations.cols(), rng), alpha, lambda,
      sigma_min);
}

PolicyLossResult AdversaryLossAndGrad(const StochasticPolicy& adversary,
                                      const NetParams& critic,
                                      const Eigen::MatrixXd& observations,
                                      const Eigen::MatrixXd& protagonist_actions,
                                      const Eigen::MatrixXd& noise, double lambda,
                                      double sigma_min) {
  const Eigen::Index batch = observations.cols();
  if (batch == 0) throw std::invalid_argument("adversary loss needs a non-empty batch");
  const PolicyBatchSample sample = SamplePolicyBatch(adversary, observations, noise);
  const CriticBatchOutput z = CriticForwardBatch(
      critic, AssembleCriticInputs(observations, protagonist_actions, sample.normalized),
      sigma_min);

  const double inv_batch = 1.0 / static_cast<double>(batch);
  PolicyLossResult result;
  result.loss = (z.mean - lambda * z.std).sum() * inv_batch;
  result.log_probs = sample.log_prob;
  result.mean_sigma = z.std.mean();

  const Eigen::VectorXd mean_grads = Eigen::VectorXd::Constant(batch, inv_batch);
  const Eigen::VectorXd std_grads = Eigen::VectorXd::Constant(batch, -lambda * inv_batch);
  const MlpBatchGradients through_critic =
      CriticBackward(critic, z, mean_grads, std_grads, /*want_param_grads=*/false);
  const Eigen::MatrixXd action_grads = through_critic.input_grads.bottomRows(kAdversaryActionDim);
  result.grads = PolicyBackward(adversary, sample, action_grads, 0.0);
  CheckFinite(result, "adversary");
  return result;
}

PolicyLossResult AdversaryLossAndGrad(const StochasticPolicy& adversary,
                                      const NetParams& critic,
                                      const Eigen::MatrixXd& observations,
                                      const Eigen::MatrixXd& protagonist_actions,
                                      double lambda, Rng& rng, double sigma_min) {
  return AdversaryLossAndGrad(
      adversary, critic, observations, protagonist_actions,
      StandardNormalMatrix(adversary.action_dim(), observations.cols(), rng), lambda,
      sigma_min);
}

double TemperatureState::alpha() const { return std::exp(log_alpha); }

TemperatureLossResult TemperatureLossAndGrad(const TemperatureState& state,
                                             const Eigen::VectorXd& log_probs) {
  if (log_probs.size() == 0) throw std::invalid_argument("temperature loss needs log-probs");
  const double alpha = state.alpha();
  const double mean_gap = (log_probs.array() + state.target_entropy).mean();
  // d/dlog_alpha of -alpha * gap is -alpha * gap, the loss itself.
  return {-alpha * mean_gap, -alpha * mean_gap};
}

}  // namespace minimax_dsac
