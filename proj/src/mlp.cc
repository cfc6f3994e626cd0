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

#include "minimax_dsac/mlp.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace minimax_dsac {
namespace {

void ValidateArchitecture(const Architecture& a) {
  if (a.input_width <= 0 || a.output_width <= 0) {
    throw std::invalid_argument("network input and output widths must be positive");
  }
  for (int w : a.hidden_widths) {
    if (w <= 0) throw std::invalid_argument("hidden widths must be positive");
  }
}

// Applies the hidden activation to z in place; fills the slope when requested.
void ActivateLayer(Activation act, Eigen::MatrixXd& z, Eigen::MatrixXd* slope) {
  if (act == Activation::kGelu) {
    // tanh(y) = (e - 1) / (e + 1), e = exp(2y); vectorizes where std::tanh does not.
    constexpr double kCubic = 0.044715;
    const double k = std::sqrt(2.0 / std::numbers::pi);
    auto x = z.array();
    const Eigen::ArrayXXd inner = k * (x + kCubic * x.cube());
    const Eigen::ArrayXXd e = (2.0 * inner.max(-20.0).min(20.0)).exp();
    const Eigen::ArrayXXd t = (e - 1.0) / (e + 1.0);
    if (slope != nullptr) {
      *slope = 0.5 * (1.0 + t) +
               0.5 * x * (1.0 - t.square()) * (k * (1.0 + 3.0 * kCubic * x.square()));
    }
    z = (0.5 * x * (1.0 + t)).matrix();
    return;
  }
  if (slope != nullptr) {
    *slope = z.unaryExpr([act](double v) { return ActivateDerivative(act, v); });
  }
  z = z.unaryExpr([act](double v) { return Activate(act, v); });
}

std::string DimensionError(const char* what, long expected, long actual) {
  std::ostringstream os;
  os << what << ": expected width " << expected << ", got " << actual;
  return os.str();
}

}  // namespace

int Architecture::layer_input_width(int layer) const {
  return layer == 0 ? input_width : hidden_widths[layer - 1];
}

int Architecture::layer_output_width(int layer) const {
  return layer == num_layers() - 1 ? output_width : hidden_widths[layer];
}

std::size_t Architecture::ParameterCount() const {
  std::size_t count = 0;
  for (int l = 0; l < num_layers(); ++l) {
    const std::size_t in = layer_input_width(l);
    const std::size_t out = layer_output_width(l);
    count += out * in + out;
  }
  return count;
}

NetParams::NetParams(Architecture architecture)
    : architecture_(std::move(architecture)) {
  ValidateArchitecture(architecture_);
  values_ = Eigen::VectorXd::Zero(
      static_cast<Eigen::Index>(architecture_.ParameterCount()));
}

NetParams::NetParams(Architecture architecture, Eigen::VectorXd values)
    : architecture_(std::move(architecture)), values_(std::move(values)) {
  ValidateArchitecture(architecture_);
  if (static_cast<std::size_t>(values_.size()) != architecture_.ParameterCount()) {
    throw std::invalid_argument(DimensionError(
        "parameter vector does not match architecture",
        static_cast<long>(architecture_.ParameterCount()),
        static_cast<long>(values_.size())));
  }
}

NetParams NetParams::RandomInit(Architecture architecture, std::mt19937_64& rng) {
  NetParams params(std::move(architecture));
  for (int l = 0; l < params.architecture().num_layers(); ++l) {
    const double bound =
        1.0 / std::sqrt(static_cast<double>(params.architecture().layer_input_width(l)));
    std::uniform_real_distribution<double> dist(-bound, bound);
    auto w = params.mutable_weights(l);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = dist(rng);
    auto b = params.mutable_bias(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = dist(rng);
  }
  return params;
}

std::size_t NetParams::weight_offset(int layer) const {
  std::size_t offset = 0;
  for (int l = 0; l < layer; ++l) {
    const std::size_t out = architecture_.layer_output_width(l);
    offset += out * architecture_.layer_input_width(l) + out;
  }
  return offset;
}

std::size_t NetParams::bias_offset(int layer) const {
  return weight_offset(layer) +
         static_cast<std::size_t>(architecture_.layer_output_width(layer)) *
             architecture_.layer_input_width(layer);
}

Eigen::Map<const RowMajorMatrix> NetParams::weights(int layer) const {
  return {values_.data() + weight_offset(layer),
          architecture_.layer_output_width(layer),
          architecture_.layer_input_width(layer)};
}

Eigen::Map<const Eigen::VectorXd> NetParams::bias(int layer) const {
  return {values_.data() + bias_offset(layer),
          architecture_.layer_output_width(layer)};
}

Eigen::Map<RowMajorMatrix> NetParams::mutable_weights(int layer) {
  return {values_.data() + weight_offset(layer),
          architecture_.layer_output_width(layer),
          architecture_.layer_input_width(layer)};
}

Eigen::Map<Eigen::VectorXd> NetParams::mutable_bias(int layer) {
  return {values_.data() + bias_offset(layer),
          architecture_.layer_output_width(layer)};
}

Eigen::MatrixXd MlpForwardBatch(const NetParams& params,
                                const Eigen::MatrixXd& inputs,
                                ForwardCache* cache) {
  const Architecture& arch = params.architecture();
  if (inputs.rows() != arch.input_width) {
    throw std::invalid_argument(
        DimensionError("mlp input", arch.input_width, inputs.rows()));
  }
  if (cache != nullptr) {
    cache->activations.assign(1, inputs);
    cache->derivatives.clear();
  }
  Eigen::MatrixXd current = inputs;
  const int last = arch.num_layers() - 1;
  for (int l = 0; l <= last; ++l) {
    Eigen::MatrixXd z = params.weights(l) * current;
    z.colwise() += params.bias(l);
    if (l == last) {
      current = std::move(z);
      break;
    }
    if (cache != nullptr) {
      Eigen::MatrixXd slope;
      ActivateLayer(arch.hidden_activation, z, &slope);
      cache->derivatives.push_back(std::move(slope));
      cache->activations.push_back(z);
    } else {
      ActivateLayer(arch.hidden_activation, z, nullptr);
    }
    current = std::move(z);
  }
  return current;
}

MlpBatchGradients MlpBackwardBatch(const NetParams& params,
                                   const ForwardCache& cache,
                                   const Eigen::MatrixXd& output_grads,
                                   bool want_param_grads) {
  const Architecture& arch = params.architecture();
  const int layers = arch.num_layers();
  if (output_grads.rows() != arch.output_width) {
    throw std::invalid_argument(
        DimensionError("mlp output gradient", arch.output_width, output_grads.rows()));
  }
  if (static_cast<int>(cache.activations.size()) != layers ||
      cache.activations[0].cols() != output_grads.cols()) {
    throw std::invalid_argument("forward cache does not match this backward pass");
  }

  MlpBatchGradients result;
  if (want_param_grads) result.param_grads = Eigen::VectorXd::Zero(params.values().size());

  Eigen::MatrixXd delta = output_grads;
  for (int l = layers - 1; l >= 0; --l) {
    const Eigen::MatrixXd& layer_input = cache.activations[l];
    if (want_param_grads) {
      Eigen::Map<RowMajorMatrix> dw(result.param_grads.data() + params.weight_offset(l),
                                    arch.layer_output_width(l), arch.layer_input_width(l));
      dw.noalias() = delta * layer_input.transpose();
      Eigen::Map<Eigen::VectorXd> db(result.param_grads.data() + params.bias_offset(l),
                                     arch.layer_output_width(l));
      db = delta.rowwise().sum();
    }
    Eigen::MatrixXd upstream = params.weights(l).transpose() * delta;
    if (l == 0) {
      result.input_grads = std::move(upstream);
      break;
    }
    delta = upstream.cwiseProduct(cache.derivatives[l - 1]);
  }
  return result;
}

Eigen::VectorXd MlpForward(const NetParams& params, const Eigen::VectorXd& input) {
  return MlpForwardBatch(params, input);
}

MlpGradients MlpBackward(const NetParams& params, const Eigen::VectorXd& input,
                         const Eigen::VectorXd& output_grad) {
  if (output_grad.size() != params.architecture().output_width) {
    throw std::invalid_argument(DimensionError(
        "mlp output gradient", params.architecture().output_width, output_grad.size()));
  }
  ForwardCache cache;
  MlpForwardBatch(params, input, &cache);
  MlpBatchGradients g = MlpBackwardBatch(params, cache, output_grad, true);
  return {std::move(g.param_grads), g.input_grads.col(0)};
}

}  // namespace minimax_dsac
