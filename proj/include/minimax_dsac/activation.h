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

#ifndef MINIMAX_DSAC_ACTIVATION_H_
#define MINIMAX_DSAC_ACTIVATION_H_

#include <string>
#include <string_view>

namespace minimax_dsac {

enum class Activation { kGelu, kTanh, kRelu };

// Hidden-layer GELU uses the tanh approximation
//   gelu(x) = 0.5 * x * (1 + tanh(sqrt(2/pi) * (x + 0.044715 * x^3)))
// and its derivative is the exact derivative of that expression.
double Gelu(double x);
double GeluDerivative(double x);

double Activate(Activation activation, double x);
double ActivateDerivative(Activation activation, double x);

std::string ActivationName(Activation activation);
// Throws std::invalid_argument for unknown names.
Activation ParseActivation(std::string_view name);

// Numerically stable scalar helpers shared by the critic and policy heads.
double Softplus(double x);
double Sigmoid(double x);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_ACTIVATION_H_
