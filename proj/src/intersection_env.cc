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

#include "minimax_dsac/intersection_env.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minimax_dsac/csv.h"

namespace minimax_dsac {
namespace {

double ClampAccel(double accel, double bound, StepDiagnostics* diagnostics) {
  if (accel > bound || accel < -bound || std::isnan(accel)) {
    if (diagnostics != nullptr) ++diagnostics->clamped_accelerations;
    if (std::isnan(accel)) return 0.0;
    return std::clamp(accel, -bound, bound);
  }
  return accel;
}

VehicleState Advance(const VehicleState& v, double accel, const EnvConfig& config) {
  VehicleState next;
  next.speed = std::clamp(v.speed + accel * config.dt, 0.0, config.max_speed);
  next.distance = v.distance - next.speed * config.dt;
  return next;
}

}  // namespace

std::string OutcomeName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kRunning:
      return "running";
    case OutcomeKind::kCollision:
      return "collision";
    case OutcomeKind::kPass:
      return "pass";
    case OutcomeKind::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

double RewardFor(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kCollision:
      return kCollisionReward;
    case OutcomeKind::kPass:
      return kPassReward;
    default:
      return kStepReward;
  }
}

void EnvConfig::Validate() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("env config: ") + msg);
  };
  require(dt > 0.0, "dt must be positive");
  require(protagonist_speed_min >= 0.0 && protagonist_speed_min <= protagonist_speed_max,
          "protagonist speed range invalid");
  require(adversary_speed_min >= 0.0 && adversary_speed_min <= adversary_speed_max,
          "adversary speed range invalid");
  require(adversary_distance_min <= adversary_distance_max, "adversary distance range invalid");
  require(protagonist_accel_bound > 0.0, "protagonist_accel_bound must be positive");
  require(adversary_accel_bound > 0.0, "adversary_accel_bound must be positive");
  require(max_speed > 0.0, "max_speed must be positive");
  require(protagonist_speed_max <= max_speed && adversary_speed_max <= max_speed,
          "initial speeds must not exceed max_speed");
  require(collision_half_length > 0.0, "collision_half_length must be positive");
  require(max_episode_steps > 0, "max_episode_steps must be positive");
  require(distance_scale > 0.0 && speed_scale > 0.0, "observation scales must be positive");
}

EnvState ResetState(const EnvConfig& config, Rng& rng) {
  std::uniform_real_distribution<double> p_speed(config.protagonist_speed_min,
                                                 config.protagonist_speed_max);
  std::uniform_real_distribution<double> a_dist(config.adversary_distance_min,
                                                config.adversary_distance_max);
  std::uniform_real_distribution<double> a_speed(config.adversary_speed_min,
                                                 config.adversary_speed_max);
  EnvState s;
  s.protagonist.distance = config.protagonist_initial_distance;
  s.protagonist.speed = p_speed(rng);
  s.adversary1.distance = a_dist(rng);
  s.adversary1.speed = a_speed(rng);
  s.adversary2.distance = a_dist(rng);
  s.adversary2.speed = a_speed(rng);
  s.step_count = 0;
  return s;
}

OutcomeKind CheckTermination(const EnvState& state, const EnvConfig& config) {
  const double half = config.collision_half_length;
  const double dp = state.protagonist.distance;
  const bool hit1 = std::abs(dp - config.conflict_point_1) < half &&
                    std::abs(state.adversary1.distance) < half;
  const bool hit2 = std::abs(dp - config.conflict_point_2) < half &&
                    std::abs(state.adversary2.distance) < half;
  if (hit1 || hit2) return OutcomeKind::kCollision;
  if (dp < config.pass_threshold) return OutcomeKind::kPass;
  if (state.step_count >= config.max_episode_steps) return OutcomeKind::kTimeLimit;
  return OutcomeKind::kRunning;
}

StepResult StepState(const EnvState& state, double protagonist_accel,
                     const Eigen::Vector2d& adversary_accel, const EnvConfig& config,
                     StepDiagnostics* diagnostics) {
  const double a = ClampAccel(protagonist_accel, config.protagonist_accel_bound, diagnostics);
  const double u1 = ClampAccel(adversary_accel[0], config.adversary_accel_bound, diagnostics);
  const double u2 = ClampAccel(adversary_accel[1], config.adversary_accel_bound, diagnostics);

  StepResult result;
  result.state.protagonist = Advance(state.protagonist, a, config);
  result.state.adversary1 = Advance(state.adversary1, u1, config);
  result.state.adversary2 = Advance(state.adversary2, u2, config);
  result.state.step_count = state.step_count + 1;

  const OutcomeKind kind = CheckTermination(result.state, config);
  result.outcome.kind = kind;
  result.outcome.reward = RewardFor(kind);
  result.outcome.done = kind != OutcomeKind::kRunning;
  return result;
}

Observation Observe(const EnvState& state, const EnvConfig& config) {
  Observation obs;
  obs << state.protagonist.distance / config.distance_scale,
      state.protagonist.speed / config.speed_scale,
      state.adversary1.distance / config.distance_scale,
      state.adversary1.speed / config.speed_scale,
      state.adversary2.distance / config.distance_scale,
      state.adversary2.speed / config.speed_scale;
  return obs;
}

EnvState Unobserve(const Observation& obs, int step_count, const EnvConfig& config) {
  EnvState s;
  s.protagonist = {obs[0] * config.distance_scale, obs[1] * config.speed_scale};
  s.adversary1 = {obs[2] * config.distance_scale, obs[3] * config.speed_scale};
  s.adversary2 = {obs[4] * config.distance_scale, obs[5] * config.speed_scale};
  s.step_count = step_count;
  return s;
}

std::string AdversaryModeName(AdversaryMode mode) {
  switch (mode) {
    case AdversaryMode::kAggressive:
      return "aggressive";
    case AdversaryMode::kConservative:
      return "conservative";
    case AdversaryMode::kRandom:
      return "random";
    case AdversaryMode::kTrainRandom:
      return "train-random";
  }
  return "unknown";
}

AdversaryMode ParseAdversaryMode(std::string_view name) {
  if (name == "aggressive") return AdversaryMode::kAggressive;
  if (name == "conservative") return AdversaryMode::kConservative;
  if (name == "random") return AdversaryMode::kRandom;
  if (name == "train-random" || name == "train_random") return AdversaryMode::kTrainRandom;
  throw std::invalid_argument("unknown adversary mode '" + std::string(name) + "'");
}

Eigen::Vector2d ScriptedAdversary(AdversaryMode mode, const EnvConfig& config, Rng& rng) {
  std::uniform_real_distribution<double> fast(1.0, 2.0);
  std::uniform_real_distribution<double> slow(-2.0, -1.0);
  std::uniform_real_distribution<double> full(-config.adversary_accel_bound,
                                              config.adversary_accel_bound);
  Eigen::Vector2d u;
  switch (mode) {
    case AdversaryMode::kAggressive:
      u[0] = fast(rng);
      u[1] = fast(rng);
      break;
    case AdversaryMode::kConservative:
      u[0] = slow(rng);
      u[1] = slow(rng);
      break;
    case AdversaryMode::kRandom:
      u[0] = slow(rng);
      u[1] = fast(rng);
      break;
    case AdversaryMode::kTrainRandom:
      u[0] = full(rng);
      u[1] = full(rng);
      break;
  }
  return u;
}

IntersectionEnv::IntersectionEnv(EnvConfig config) : config_(std::move(config)) {
  config_.Validate();
}

const EnvState& IntersectionEnv::Reset(Rng& rng) {
  state_ = ResetState(config_, rng);
  return state_;
}

StepOutcome IntersectionEnv::Step(double protagonist_accel,
                                  const Eigen::Vector2d& adversary_accel) {
  StepResult r = StepState(state_, protagonist_accel, adversary_accel, config_, &diagnostics_);
  state_ = r.state;
  return r.outcome;
}

void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows) {
  CsvWriter csv(path, kTrajectoryCsvHeader);
  for (const TrajectoryRow& r : rows) {
    csv.Row(r.time, r.state.protagonist.distance, r.state.protagonist.speed,
            r.state.adversary1.distance, r.state.adversary1.speed, r.state.adversary2.distance,
            r.state.adversary2.speed, r.protagonist_accel, r.adversary_accel[0],
            r.adversary_accel[1], r.reward, OutcomeName(r.outcome));
  }
}

}  // namespace minimax_dsac
