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

#include "minimax_dsac/adam.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minimax_dsac {

AdamState::AdamState(Eigen::Index size, AdamOptions opts)
    : m(Eigen::VectorXd::Zero(size)), v(Eigen::VectorXd::Zero(size)), options(opts) {}

void AdamStep(AdamState& state, Eigen::Ref<Eigen::VectorXd> params,
              const Eigen::VectorXd& grads, double lr) {
  if (grads.size() != params.size() || state.m.size() != params.size()) {
    throw std::invalid_argument("adam: gradient length " + std::to_string(grads.size()) +
                                " does not match parameter length " +
                                std::to_string(params.size()));
  }
  if (!grads.allFinite()) {
    for (Eigen::Index i = 0; i < grads.size(); ++i) {
      if (!std::isfinite(grads[i])) {
        throw std::domain_error("adam: non-finite gradient at index " + std::to_string(i));
      }
    }
  }
  const AdamOptions& o = state.options;
  state.t += 1;
  state.m = o.beta1 * state.m + (1.0 - o.beta1) * grads;
  state.v = o.beta2 * state.v + (1.0 - o.beta2) * grads.cwiseAbs2();
  const double m_correction = 1.0 - std::pow(o.beta1, static_cast<double>(state.t));
  const double v_correction = 1.0 - std::pow(o.beta2, static_cast<double>(state.t));
  params.array() -= lr * (state.m.array() / m_correction) /
                    ((state.v.array() / v_correction).sqrt() + o.epsilon);
}

}  // namespace minimax_dsac
