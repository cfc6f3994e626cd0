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

#ifndef MINIMAX_DSAC_INTERSECTION_ENV_H_
#define MINIMAX_DSAC_INTERSECTION_ENV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "minimax_dsac/types.h"

namespace minimax_dsac {

inline constexpr double kPassReward = 110.0;
inline constexpr double kCollisionReward = -110.0;
inline constexpr double kStepReward = -1.0;

// Position along a fixed path: distance to the intersection center, positive
// while approaching and negative after crossing.
struct VehicleState {
  double distance = 0.0;
  double speed = 0.0;

  bool operator==(const VehicleState&) const = default;
};

// The protagonist drives down -> up; adversary1 right -> left; adversary2
// left -> right. Each adversary's path crosses the protagonist's path at one
// conflict point.
struct EnvState {
  VehicleState protagonist;
  VehicleState adversary1;
  VehicleState adversary2;
  int step_count = 0;

  bool operator==(const EnvState&) const = default;
};

enum class OutcomeKind { kRunning, kCollision, kPass, kTimeLimit };

std::string OutcomeName(OutcomeKind kind);

// done marks the end of the episode (any kind but kRunning). Only Collision
// and Pass are true terminals for bootstrapping; see IsTerminal.
struct StepOutcome {
  double reward = kStepReward;
  bool done = false;
  OutcomeKind kind = OutcomeKind::kRunning;
};

inline bool IsTerminal(OutcomeKind kind) {
  return kind == OutcomeKind::kCollision || kind == OutcomeKind::kPass;
}

double RewardFor(OutcomeKind kind);

struct EnvConfig {
  double dt = 0.1;
  double protagonist_initial_distance = 25.0;
  double protagonist_speed_min = 2.0;
  double protagonist_speed_max = 8.0;
  double adversary_distance_min = 20.0;
  double adversary_distance_max = 30.0;
  double adversary_speed_min = 2.0;
  double adversary_speed_max = 8.0;
  double protagonist_accel_bound = 3.0;
  double adversary_accel_bound = 2.0;
  double max_speed = 12.0;
  // Both conflict points sit at these protagonist path coordinates.
  double conflict_point_1 = 0.0;
  double conflict_point_2 = 0.0;
  double collision_half_length = 2.0;
  double pass_threshold = -15.0;
  int max_episode_steps = 200;
  double distance_scale = 25.0;
  double speed_scale = 10.0;

  // Throws std::invalid_argument when a physical quantity is out of range.
  void Validate() const;
};

EnvState ResetState(const EnvConfig& config, Rng& rng);

struct StepDiagnostics {
  long clamped_accelerations = 0;
};

struct StepResult {
  EnvState state;
  StepOutcome outcome;
};

// Constant-acceleration update over one dt: v' = clamp(v + a dt, 0, v_max),
// d' = d - v' dt. Out-of-bound accelerations are clamped and counted.
StepResult StepState(const EnvState& state, double protagonist_accel,
                     const Eigen::Vector2d& adversary_accel, const EnvConfig& config,
                     StepDiagnostics* diagnostics = nullptr);

// Collision > Pass > TimeLimit > Running.
OutcomeKind CheckTermination(const EnvState& state, const EnvConfig& config);

Observation Observe(const EnvState& state, const EnvConfig& config);
// Inverse of Observe (the step counter is not part of the observation).
EnvState Unobserve(const Observation& observation, int step_count, const EnvConfig& config);

enum class AdversaryMode { kAggressive, kConservative, kRandom, kTrainRandom };

std::string AdversaryModeName(AdversaryMode mode);
// Accepts aggressive, conservative, random, train-random.
AdversaryMode ParseAdversaryMode(std::string_view name);

// Scripted adversary accelerations (m/s^2) for evaluation and DSAC training.
Eigen::Vector2d ScriptedAdversary(AdversaryMode mode, const EnvConfig& config, Rng& rng);

// Stateful wrapper that owns one episode at a time.
class IntersectionEnv {
 public:
  explicit IntersectionEnv(EnvConfig config);

  const EnvState& Reset(Rng& rng);
  // Starts from a given state instead of sampling one.
  void SetState(const EnvState& state) { state_ = state; }
  StepOutcome Step(double protagonist_accel, const Eigen::Vector2d& adversary_accel);

  const EnvState& state() const { return state_; }
  Observation observation() const { return Observe(state_, config_); }
  const EnvConfig& config() const { return config_; }
  const StepDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  EnvConfig config_;
  EnvState state_;
  StepDiagnostics diagnostics_;
};

// One row of a per-step trajectory dump.
struct TrajectoryRow {
  double time = 0.0;
  EnvState state;  // state after the step
  double protagonist_accel = 0.0;
  Eigen::Vector2d adversary_accel = Eigen::Vector2d::Zero();
  double reward = 0.0;
  OutcomeKind outcome = OutcomeKind::kRunning;
};

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t,d_p,v_p,d_a1,v_a1,d_a2,v_a2,a,u1,u2,r,outcome";

void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_INTERSECTION_ENV_H_
