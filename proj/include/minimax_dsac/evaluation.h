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

#ifndef MINIMAX_DSAC_EVALUATION_H_
#define MINIMAX_DSAC_EVALUATION_H_

#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/intersection_env.h"
#include "minimax_dsac/mlp.h"
#include "minimax_dsac/policy.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac {

struct EpisodeRecord {
  EnvState initial_state;
  // Physical accelerations actually requested each step.
  std::vector<double> protagonist_actions;
  std::vector<Eigen::Vector2d> adversary_actions;
  std::vector<TrajectoryRow> trajectory;
  double episode_return = 0.0;
  OutcomeKind outcome = OutcomeKind::kRunning;
  int steps = 0;
};

struct EvalSummary {
  AdversaryMode mode = AdversaryMode::kAggressive;
  std::vector<double> returns;
  double mean = 0.0;
  double std = 0.0;
  double pass_rate = 0.0;
  double collision_rate = 0.0;
  // Mean of steps * dt over passing episodes; NaN when none passed.
  double mean_crossing_time = 0.0;
  std::vector<EpisodeRecord> episodes;
};

// Runs independent episodes with scripted adversaries. The protagonist acts
// deterministically: accel = scale * tanh(mean). Parameters are read only.
EvalSummary Evaluate(const StochasticPolicy& protagonist, AdversaryMode mode, int episodes,
                     const EnvConfig& config, Rng& rng);
EvalSummary Evaluate(const NetParams& protagonist, AdversaryMode mode, int episodes,
                     const EnvConfig& config, Rng& rng);

// Recomputes the summary statistics from episode records.
EvalSummary Summarize(AdversaryMode mode, std::vector<EpisodeRecord> episodes,
                      const EnvConfig& config);

// The protagonist as a policy object with the environment's action bound.
StochasticPolicy MakeProtagonist(NetParams params, const EnvConfig& config,
                                 PolicyOptions options = {});
StochasticPolicy MakeAdversary(NetParams params, const EnvConfig& config,
                               PolicyOptions options = {});

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_EVALUATION_H_
