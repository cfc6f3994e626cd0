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

#ifndef MINIMAX_DSAC_MLP_H_
#define MINIMAX_DSAC_MLP_H_

#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/activation.h"

namespace minimax_dsac {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Shape of a fully connected network. Hidden layers share one activation;
// the output layer is linear.
struct Architecture {
  int input_width = 0;
  std::vector<int> hidden_widths;
  int output_width = 0;
  Activation hidden_activation = Activation::kGelu;

  int num_layers() const { return static_cast<int>(hidden_widths.size()) + 1; }
  int layer_input_width(int layer) const;
  int layer_output_width(int layer) const;
  std::size_t ParameterCount() const;

  bool operator==(const Architecture&) const = default;
};

// Flat parameter vector of one network. For every layer the row-major weight
// matrix (out x in) is stored first, followed by the bias vector.
class NetParams {
 public:
  // All-zero parameters.
  explicit NetParams(Architecture architecture);
  NetParams(Architecture architecture, Eigen::VectorXd values);

  // Weights and biases ~ Uniform[-1/sqrt(fan_in), 1/sqrt(fan_in)].
  static NetParams RandomInit(Architecture architecture, std::mt19937_64& rng);

  const Architecture& architecture() const { return architecture_; }
  const Eigen::VectorXd& values() const { return values_; }
  // Fixed-size view; the parameter count cannot change after construction.
  Eigen::Map<Eigen::VectorXd> mutable_values() {
    return Eigen::Map<Eigen::VectorXd>(values_.data(), values_.size());
  }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  Eigen::Map<const RowMajorMatrix> weights(int layer) const;
  Eigen::Map<const Eigen::VectorXd> bias(int layer) const;
  Eigen::Map<RowMajorMatrix> mutable_weights(int layer);
  Eigen::Map<Eigen::VectorXd> mutable_bias(int layer);

  std::size_t weight_offset(int layer) const;
  std::size_t bias_offset(int layer) const;

 private:
  Architecture architecture_;
  Eigen::VectorXd values_;
};

// Per-layer values kept by a batched forward pass for the backward pass.
// Columns are samples.
struct ForwardCache {
  std::vector<Eigen::MatrixXd> activations;  // activations[0] is the input
  std::vector<Eigen::MatrixXd> derivatives;  // activation slope, one per hidden layer
};

struct MlpGradients {
  Eigen::VectorXd param_grads;
  Eigen::VectorXd input_grads;
};

struct MlpBatchGradients {
  Eigen::VectorXd param_grads;  // summed over the batch; empty if not requested
  Eigen::MatrixXd input_grads;  // input_width x batch
};

Eigen::VectorXd MlpForward(const NetParams& params,
                           const Eigen::VectorXd& input);

// Reverse-mode gradients of <output, output_grad> with respect to the
// parameters and the input.
MlpGradients MlpBackward(const NetParams& params, const Eigen::VectorXd& input,
                         const Eigen::VectorXd& output_grad);

// inputs is input_width x batch. When cache is non-null it is filled for a
// subsequent MlpBackwardBatch call.
Eigen::MatrixXd MlpForwardBatch(const NetParams& params,
                                const Eigen::MatrixXd& inputs,
                                ForwardCache* cache = nullptr);

MlpBatchGradients MlpBackwardBatch(const NetParams& params,
                                   const ForwardCache& cache,
                                   const Eigen::MatrixXd& output_grads,
                                   bool want_param_grads = true);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_MLP_H_
