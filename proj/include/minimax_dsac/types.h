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

#ifndef MINIMAX_DSAC_TYPES_H_
#define MINIMAX_DSAC_TYPES_H_

#include <random>

#include <Eigen/Dense>

namespace minimax_dsac {

using Rng = std::mt19937_64;

inline constexpr int kObservationDim = 6;
inline constexpr int kProtagonistActionDim = 1;
inline constexpr int kAdversaryActionDim = 2;
inline constexpr int kCriticInputDim =
    kObservationDim + kProtagonistActionDim + kAdversaryActionDim;

using Observation = Eigen::Matrix<double, kObservationDim, 1>;

// One environment interaction. Actions are normalized to [-1, 1].
// done is true only when the episode terminated at next_observation
// (collision or pass); time-limit truncation keeps done = false.
struct Transition {
  Observation observation = Observation::Zero();
  double protagonist_action = 0.0;
  Eigen::Vector2d adversary_action = Eigen::Vector2d::Zero();
  double reward = 0.0;
  Observation next_observation = Observation::Zero();
  bool done = false;
};

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_TYPES_H_
