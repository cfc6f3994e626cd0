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

#ifndef MINIMAX_DSAC_TRAINER_H_
#define MINIMAX_DSAC_TRAINER_H_

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minimax_dsac/actor_losses.h"
#include "minimax_dsac/adam.h"
#include "minimax_dsac/checkpoint.h"
#include "minimax_dsac/config.h"
#include "minimax_dsac/critic.h"
#include "minimax_dsac/evaluation.h"
#include "minimax_dsac/policy.h"
#include "minimax_dsac/types.h"

namespace minimax_dsac {

// Raised when a loss or gradient becomes non-finite during training.
class TrainingDivergedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class UpdatePhase { kCritic, kProtagonist, kAdversary, kTemperature, kTargets };

std::string UpdatePhaseName(UpdatePhase phase);

struct LearningRates {
  double critic = 0.0;
  double actor = 0.0;
  double alpha = 0.0;
};

// Learning rates at env step `step` of `total`.
LearningRates ScheduledLearningRates(const TrainConfig& config, long step);

struct UpdateStats {
  double critic_loss = 0.0;
  double protagonist_loss = 0.0;
  double adversary_loss = 0.0;  // NaN in dsac mode
  double temperature_loss = 0.0;
  double alpha = 0.0;           // after the temperature update
  double max_clip_excess = 0.0;  // max |clipped - q| - bound over the batch (<= 0)
};

class Learner;
using PhaseObserver = std::function<void(UpdatePhase, const Learner&)>;

// Owns every learned parameter: critic, protagonist, optional adversary,
// their target copies, optimizer states and the temperature.
class Learner {
 public:
  Learner(const TrainConfig& config, Rng& init_rng);

  // One round on a sampled batch, in order: critic, protagonist, adversary
  // (minimax only), temperature, target networks.
  UpdateStats UpdateRound(std::span<const Transition> batch, const LearningRates& rates,
                          Rng& rng, const PhaseObserver& observer = {});

  bool has_adversary() const { return adversary_.has_value(); }
  const NetParams& critic() const { return critic_; }
  const NetParams& critic_target() const { return critic_target_; }
  const StochasticPolicy& protagonist() const { return protagonist_; }
  const StochasticPolicy& protagonist_target() const { return protagonist_target_; }
  // Only valid when has_adversary().
  const StochasticPolicy& adversary() const { return *adversary_; }
  const StochasticPolicy& adversary_target() const { return *adversary_target_; }
  const TemperatureState& temperature() const { return temperature_; }

  Checkpoint MakeCheckpoint(long env_steps) const;

 private:
  TrainConfig config_;
  NetParams critic_;
  NetParams critic_target_;
  StochasticPolicy protagonist_;
  StochasticPolicy protagonist_target_;
  std::optional<StochasticPolicy> adversary_;
  std::optional<StochasticPolicy> adversary_target_;
  TemperatureState temperature_;
  AdamState critic_adam_;
  AdamState protagonist_adam_;
  std::optional<AdamState> adversary_adam_;
  AdamState alpha_adam_;
};

struct TrainingLogRow {
  long iteration = 0;  // update rounds performed so far
  long env_steps = 0;
  double avg_return = 0.0;  // NaN until an episode completes
  double critic_loss = 0.0;
  double protagonist_loss = 0.0;
  double adversary_loss = 0.0;
  double alpha = 0.0;
  double actor_lr = 0.0;
  double critic_lr = 0.0;
  double alpha_lr = 0.0;
};

struct RunArtifacts {
  TrainConfig config;
  std::vector<TrainingLogRow> log;
  std::vector<Checkpoint> checkpoints;
  std::vector<EvalSummary> evaluations;
  std::vector<double> episode_returns;  // every completed training episode
};

struct TrainHooks {
  PhaseObserver on_phase;
  std::function<void(const TrainingLogRow&)> on_log;
  // Evaluate the final protagonist under every scripted mode.
  bool final_evaluation = true;
};

// Synchronous interaction/update loop. Throws TrainingDivergedError on
// non-finite losses.
RunArtifacts Train(const TrainConfig& config, const TrainHooks& hooks = {});

// Independent random streams derived from one seed.
enum class RngStream { kInit = 1, kEnv = 2, kAction = 3, kUpdate = 4, kEval = 5 };
Rng MakeRng(std::uint64_t seed, RngStream stream);

// Keeps batch-sized temporaries on the heap instead of fresh mmap pages.
// Training allocates and frees the same few hundred kilobytes every update;
// with glibc defaults that costs more in page faults than the arithmetic.
// No-op on other allocators. Call once from the program entry point.
void TuneAllocatorForTraining();

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_TRAINER_H_
