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

#ifndef MINIMAX_DSAC_TESTS_TEST_SUPPORT_H_
#define MINIMAX_DSAC_TESTS_TEST_SUPPORT_H_

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/intersection_env.h"
#include "minimax_dsac/mlp.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac::testing {

// Forward pass written with plain loops and its own GELU, independent of the
// Eigen implementation. Uses the documented flat layout: per layer a
// row-major (out x in) weight block followed by the bias.
std::vector<double> OracleForward(const Architecture& arch, const Eigen::VectorXd& flat,
                                  const std::vector<double>& input);
double OracleGelu(double x);

// Central differences of a scalar function, one coordinate at a time.
Eigen::VectorXd CentralDifference(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x, double h = 1e-5);

struct GradCheck {
  bool ok = true;
  double worst_error = 0.0;  // max over components of |a - n| / max(|a|, |n|) beyond the floor
  Eigen::Index worst_index = -1;
};

// Every component must satisfy |a - n| <= max(abs_floor, rel * max(|a|, |n|)).
GradCheck CompareGradients(const Eigen::VectorXd& analytic, const Eigen::VectorXd& numeric,
                           double rel = 1e-4, double abs_floor = 1e-6);

// Parameters ~ Uniform[-scale, scale] / sqrt(fan_in).
NetParams RandomParams(const Architecture& arch, Rng& rng, double scale = 1.0);

// Normalized observations covering the reachable state ranges.
Eigen::MatrixXd RandomObservations(Eigen::Index batch, Rng& rng);
// Normalized actions in (-0.95, 0.95).
Eigen::MatrixXd RandomActions(Eigen::Index dim, Eigen::Index batch, Rng& rng);

// Zone-overlap check written from the geometric definition: a conflict zone
// is occupied when a vehicle is within the half-length of the conflict point.
OutcomeKind OracleTermination(double d_p, double d_a1, double d_a2, int step_count,
                              const EnvConfig& cfg);

// Scalar kinematics with the same clamping rules as the simulator.
EnvState OracleStep(const EnvState& s, double a, double u1, double u2, const EnvConfig& cfg);

}  // namespace minimax_dsac::testing

#endif  // MINIMAX_DSAC_TESTS_TEST_SUPPORT_H_
