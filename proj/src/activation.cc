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

#include "minimax_dsac/activation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minimax_dsac {
namespace {

constexpr double kGeluCubic = 0.044715;
const double kSqrtTwoOverPi = std::sqrt(2.0 / std::numbers::pi);

}  // namespace

double Gelu(double x) {
  const double inner = kSqrtTwoOverPi * (x + kGeluCubic * x * x * x);
  return 0.5 * x * (1.0 + std::tanh(inner));
}

double GeluDerivative(double x) {
  const double inner = kSqrtTwoOverPi * (x + kGeluCubic * x * x * x);
  const double t = std::tanh(inner);
  const double inner_prime = kSqrtTwoOverPi * (1.0 + 3.0 * kGeluCubic * x * x);
  return 0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * inner_prime;
}

double Activate(Activation activation, double x) {
  switch (activation) {
    case Activation::kGelu:
      return Gelu(x);
    case Activation::kTanh:
      return std::tanh(x);
    case Activation::kRelu:
      return x > 0.0 ? x : 0.0;
  }
  return x;
}

double ActivateDerivative(Activation activation, double x) {
  switch (activation) {
    case Activation::kGelu:
      return GeluDerivative(x);
    case Activation::kTanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case Activation::kRelu:
      return x > 0.0 ? 1.0 : 0.0;
  }
  return 1.0;
}

std::string ActivationName(Activation activation) {
  switch (activation) {
    case Activation::kGelu:
      return "gelu";
    case Activation::kTanh:
      return "tanh";
    case Activation::kRelu:
      return "relu";
  }
  return "unknown";
}

Activation ParseActivation(std::string_view name) {
  if (name == "gelu") return Activation::kGelu;
  if (name == "tanh") return Activation::kTanh;
  if (name == "relu") return Activation::kRelu;
  throw std::invalid_argument("unknown activation '" + std::string(name) + "'");
}

double Softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace minimax_dsac
