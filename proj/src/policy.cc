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

#include "minimax_dsac/policy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace minimax_dsac {
namespace {

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

}  // namespace

double LogOneMinusTanhSquared(double x) {
  return 2.0 * (std::numbers::ln2 - x - Softplus(-2.0 * x));
}

Architecture PolicyArchitecture(int action_dim, std::vector<int> hidden_widths,
                                Activation activation) {
  return {kObservationDim, std::move(hidden_widths), 2 * action_dim, activation};
}

StochasticPolicy::StochasticPolicy(NetParams params, Eigen::VectorXd action_scale,
                                   PolicyOptions options)
    : params_(std::move(params)), action_scale_(std::move(action_scale)), options_(options) {
  const Architecture& arch = params_.architecture();
  if (action_scale_.size() == 0 || arch.output_width != 2 * action_scale_.size()) {
    throw std::invalid_argument("policy network must output a mean and a log-std per action");
  }
  if (arch.input_width != kObservationDim) {
    throw std::invalid_argument("policy network input must be the 6-dimensional observation");
  }
  if ((action_scale_.array() <= 0.0).any()) {
    throw std::invalid_argument("action scales must be positive");
  }
  if (!(options_.log_std_min < options_.log_std_max)) {
    throw std::invalid_argument("log_std_min must be below log_std_max");
  }
}

PolicyBatchSample SamplePolicyBatch(const StochasticPolicy& policy,
                                    const Eigen::MatrixXd& observations,
                                    const Eigen::MatrixXd& noise) {
  const int dim = policy.action_dim();
  if (noise.rows() != dim || noise.cols() != observations.cols()) {
    throw std::invalid_argument("noise must be action_dim x batch");
  }
  PolicyBatchSample s;
  const Eigen::MatrixXd out = MlpForwardBatch(policy.params(), observations, &s.cache);
  const Eigen::Index batch = observations.cols();
  const PolicyOptions& opt = policy.options();

  s.noise = noise;
  s.mean = out.topRows(dim);
  const Eigen::MatrixXd raw = out.bottomRows(dim);
  s.log_std = raw.cwiseMax(opt.log_std_min).cwiseMin(opt.log_std_max);
  s.log_std_pass = raw.unaryExpr([&](double r) {
    return (r >= opt.log_std_min && r <= opt.log_std_max) ? 1.0 : 0.0;
  });
  s.std = s.log_std.array().exp();
  s.pre_squash = s.mean + s.std.cwiseProduct(noise);
  s.normalized = s.pre_squash.array().tanh();
  s.log_prob.resize(batch);
  for (Eigen::Index i = 0; i < batch; ++i) {
    double lp = 0.0;
    for (int j = 0; j < dim; ++j) {
      const double xi = noise(j, i);
      lp += -0.5 * xi * xi - s.log_std(j, i) - kHalfLogTwoPi -
            LogOneMinusTanhSquared(s.pre_squash(j, i));
    }
    s.log_prob[i] = lp;
  }
  return s;
}

Eigen::VectorXd PolicyBackward(const StochasticPolicy& policy,
                               const PolicyBatchSample& sample,
                               const Eigen::MatrixXd& normalized_grads,
                               double entropy_coef) {
  const int dim = policy.action_dim();
  const Eigen::Index batch = sample.noise.cols();
  Eigen::MatrixXd out_grads(2 * dim, batch);
  for (Eigen::Index i = 0; i < batch; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double a = sample.normalized(j, i);
      // d log_prob / dx = 2 tanh(x); d log_prob / d log_std has an extra -1.
      const double grad_x = normalized_grads(j, i) * (1.0 - a * a) + entropy_coef * 2.0 * a;
      const double x_minus_mean = sample.std(j, i) * sample.noise(j, i);
      out_grads(j, i) = grad_x;
      out_grads(dim + j, i) =
          (grad_x * x_minus_mean - entropy_coef) * sample.log_std_pass(j, i);
    }
  }
  return MlpBackwardBatch(policy.params(), sample.cache, out_grads, true).param_grads;
}

Eigen::MatrixXd StandardNormalMatrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = normal(rng);
  }
  return m;
}

ActionSample SampleAction(const StochasticPolicy& policy,
                          const Eigen::VectorXd& observation,
                          const Eigen::VectorXd& noise) {
  if (noise.size() != policy.action_dim()) {
    throw std::invalid_argument("noise dimension " + std::to_string(noise.size()) +
                                " does not match action dimension " +
                                std::to_string(policy.action_dim()));
  }
  const PolicyBatchSample s = SamplePolicyBatch(policy, observation, noise);
  ActionSample result;
  result.normalized = s.normalized.col(0);
  result.physical = policy.action_scale().cwiseProduct(result.normalized);
  result.log_prob = s.log_prob[0];
  return result;
}

ActionSample SampleAction(const StochasticPolicy& policy,
                          const Eigen::VectorXd& observation, Rng& rng) {
  return SampleAction(policy, observation,
                      StandardNormalMatrix(policy.action_dim(), 1, rng).col(0));
}

Eigen::VectorXd DeterministicAction(const StochasticPolicy& policy,
                                    const Eigen::VectorXd& observation) {
  const Eigen::VectorXd out = MlpForward(policy.params(), observation);
  return out.head(policy.action_dim()).array().tanh();
}

double LogProbOfNormalized(const StochasticPolicy& policy,
                           const Eigen::VectorXd& observation,
                           const Eigen::VectorXd& normalized_action) {
  const int dim = policy.action_dim();
  if (normalized_action.size() != dim) {
    throw std::invalid_argument("action dimension mismatch");
  }
  const Eigen::VectorXd out = MlpForward(policy.params(), observation);
  const PolicyOptions& opt = policy.options();
  double lp = 0.0;
  for (int j = 0; j < dim; ++j) {
    const double a = normalized_action[j];
    if (!(a > -1.0 && a < 1.0)) return -std::numeric_limits<double>::infinity();
    const double x = std::atanh(a);
    const double log_std = std::clamp(out[dim + j], opt.log_std_min, opt.log_std_max);
    const double z = (x - out[j]) / std::exp(log_std);
    lp += -0.5 * z * z - log_std - kHalfLogTwoPi - LogOneMinusTanhSquared(x);
  }
  return lp;
}

}  // namespace minimax_dsac
