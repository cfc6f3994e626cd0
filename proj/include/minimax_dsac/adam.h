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

#ifndef MINIMAX_DSAC_ADAM_H_
#define MINIMAX_DSAC_ADAM_H_

#include <cstdint>

#include <Eigen/Dense>

#include "minimax_dsac/mlp.h"

namespace minimax_dsac {

struct AdamOptions {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// First/second moment estimates for one parameter vector.
struct AdamState {
  AdamState(Eigen::Index size, AdamOptions options = {});

  Eigen::VectorXd m;
  Eigen::VectorXd v;
  std::int64_t t = 0;
  AdamOptions options;
};

// Bias-corrected Adam update in place. Rejects (std::domain_error) gradients
// with non-finite components without touching params or state.
void AdamStep(AdamState& state, Eigen::Ref<Eigen::VectorXd> params,
              const Eigen::VectorXd& grads, double lr);

inline void AdamStep(AdamState& state, NetParams& params,
                     const Eigen::VectorXd& grads, double lr) {
  AdamStep(state, params.mutable_values(), grads, lr);
}

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_ADAM_H_
