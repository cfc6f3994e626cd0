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

#include "minimax_dsac/trainer.h"

#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "minimax_dsac/errors.h"
#include "minimax_dsac/intersection_env.h"
#include "minimax_dsac/replay_buffer.h"
#include "minimax_dsac/stats.h"
#include "minimax_dsac/updates.h"

namespace minimax_dsac {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

AdamOptions AdamFrom(const TrainConfig& c) { return {c.adam_beta1, c.adam_beta2, c.adam_epsilon}; }

PolicyOptions PolicyFrom(const TrainConfig& c) { return {c.log_std_min, c.log_std_max}; }

StochasticPolicy NewProtagonist(const TrainConfig& c, Rng& rng) {
  return MakeProtagonist(
      NetParams::RandomInit(PolicyArchitecture(kProtagonistActionDim, c.hidden_widths, c.activation),
                            rng),
      c.env, PolicyFrom(c));
}

StochasticPolicy NewAdversary(const TrainConfig& c, Rng& rng) {
  return MakeAdversary(
      NetParams::RandomInit(PolicyArchitecture(kAdversaryActionDim, c.hidden_widths, c.activation),
                            rng),
      c.env, PolicyFrom(c));
}

struct BatchMatrices {
  Eigen::MatrixXd observations;
  Eigen::MatrixXd protagonist_actions;
  Eigen::MatrixXd adversary_actions;
};

BatchMatrices Stack(std::span<const Transition> batch) {
  const Eigen::Index n = static_cast<Eigen::Index>(batch.size());
  BatchMatrices m{Eigen::MatrixXd(kObservationDim, n), Eigen::MatrixXd(1, n),
                  Eigen::MatrixXd(kAdversaryActionDim, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    m.observations.col(i) = batch[i].observation;
    m.protagonist_actions(0, i) = batch[i].protagonist_action;
    m.adversary_actions.col(i) = batch[i].adversary_action;
  }
  return m;
}

const TrainConfig& Validated(const TrainConfig& c) {
  c.Validate();
  return c;
}

std::string BatchDiagnostics(std::span<const Transition> batch) {
  double reward_sum = 0.0;
  double max_abs_obs = 0.0;
  int terminals = 0;
  for (const Transition& t : batch) {
    reward_sum += t.reward;
    max_abs_obs = std::max(max_abs_obs, t.observation.cwiseAbs().maxCoeff());
    terminals += t.done ? 1 : 0;
  }
  std::ostringstream os;
  os << "batch size " << batch.size() << ", mean reward "
     << (batch.empty() ? 0.0 : reward_sum / static_cast<double>(batch.size()))
     << ", terminals " << terminals << ", max |obs| " << max_abs_obs;
  return os.str();
}

}  // namespace

std::string UpdatePhaseName(UpdatePhase phase) {
  switch (phase) {
    case UpdatePhase::kCritic:
      return "critic";
    case UpdatePhase::kProtagonist:
      return "protagonist";
    case UpdatePhase::kAdversary:
      return "adversary";
    case UpdatePhase::kTemperature:
      return "temperature";
    case UpdatePhase::kTargets:
      return "targets";
  }
  return "unknown";
}

LearningRates ScheduledLearningRates(const TrainConfig& c, long step) {
  const long total = std::max(c.total_steps, 1L);
  step = std::clamp(step, 0L, total);
  return {LinearSchedule(c.critic_lr_start, c.critic_lr_end, step, total),
          LinearSchedule(c.actor_lr_start, c.actor_lr_end, step, total),
          LinearSchedule(c.alpha_lr_start, c.alpha_lr_end, step, total)};
}

Rng MakeRng(std::uint64_t seed, RngStream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

void TuneAllocatorForTraining() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 64 << 20);
  mallopt(M_TRIM_THRESHOLD, 256 << 20);
  mallopt(M_TOP_PAD, 64 << 20);
#endif
}

Learner::Learner(const TrainConfig& config, Rng& init_rng)
    : config_(Validated(config)),
      critic_(NetParams::RandomInit(CriticArchitecture(config.hidden_widths, config.activation),
                                    init_rng)),
      critic_target_(critic_),
      protagonist_(NewProtagonist(config, init_rng)),
      protagonist_target_(protagonist_),
      temperature_{std::log(config.initial_alpha), config.target_entropy},
      critic_adam_(static_cast<Eigen::Index>(critic_.size()), AdamFrom(config)),
      protagonist_adam_(static_cast<Eigen::Index>(protagonist_.params().size()), AdamFrom(config)),
      alpha_adam_(1, AdamFrom(config)) {
  if (config.algorithm == Algorithm::kMinimaxDsac) {
    adversary_.emplace(NewAdversary(config, init_rng));
    adversary_target_.emplace(*adversary_);
    adversary_adam_.emplace(static_cast<Eigen::Index>(adversary_->params().size()),
                            AdamFrom(config));
  }
}

UpdateStats Learner::UpdateRound(std::span<const Transition> batch, const LearningRates& rates,
                                 Rng& rng, const PhaseObserver& observer) {
  const TrainConfig& c = config_;
  UpdateStats stats;
  const BatchMatrices m = Stack(batch);
  auto notify = [&](UpdatePhase phase) {
    if (observer) observer(phase, *this);
  };

  // Critic: soft Bellman targets from the target networks, clipped around Q.
  {
    const TargetModels targets{critic_target_, protagonist_target_,
                               adversary_target_ ? &*adversary_target_ : nullptr};
    const Eigen::VectorXd raw =
        TdTargetBatch(targets, batch, {temperature_.alpha(), c.gamma, c.sigma_min}, rng);
    const Eigen::MatrixXd inputs =
        AssembleCriticInputs(m.observations, m.protagonist_actions, m.adversary_actions);
    const ClippedCriticLoss critic_loss =
        ClippedCriticLossAndGrad(critic_, inputs, raw, c.clip_boundary, c.sigma_min);
    stats.critic_loss = critic_loss.loss.loss;
    stats.max_clip_excess =
        ((critic_loss.clipped_targets - critic_loss.q_current).cwiseAbs().array() -
         c.clip_boundary)
            .maxCoeff();
    AdamStep(critic_adam_, critic_, critic_loss.loss.grads, rates.critic);
  }
  notify(UpdatePhase::kCritic);

  // Protagonist: descent on alpha log pi - Q + lambda_a sigma.
  Eigen::VectorXd log_probs;
  {
    const PolicyLossResult r =
        ProtagonistLossAndGrad(protagonist_, critic_, m.observations, m.adversary_actions,
                               temperature_.alpha(), c.lambda_a, rng, c.sigma_min);
    stats.protagonist_loss = r.loss;
    log_probs = r.log_probs;
    AdamStep(protagonist_adam_, protagonist_.mutable_params(), r.grads, rates.actor);
  }
  notify(UpdatePhase::kProtagonist);

  // Adversary: descent on Q - lambda_u sigma.
  stats.adversary_loss = kNaN;
  if (adversary_) {
    const PolicyLossResult r = AdversaryLossAndGrad(*adversary_, critic_, m.observations,
                                                    m.protagonist_actions, c.lambda_u, rng,
                                                    c.sigma_min);
    stats.adversary_loss = r.loss;
    AdamStep(*adversary_adam_, adversary_->mutable_params(), r.grads, rates.actor);
    notify(UpdatePhase::kAdversary);
  }

  {
    const TemperatureLossResult r = TemperatureLossAndGrad(temperature_, log_probs);
    stats.temperature_loss = r.loss;
    Eigen::VectorXd log_alpha = Eigen::VectorXd::Constant(1, temperature_.log_alpha);
    AdamStep(alpha_adam_, log_alpha, Eigen::VectorXd::Constant(1, r.grad_log_alpha), rates.alpha);
    temperature_.log_alpha = log_alpha[0];
    stats.alpha = temperature_.alpha();
  }
  notify(UpdatePhase::kTemperature);

  SoftUpdateInPlace(critic_, critic_target_, c.tau);
  SoftUpdateInPlace(protagonist_.params(), protagonist_target_.mutable_params(), c.tau);
  if (adversary_) {
    SoftUpdateInPlace(adversary_->params(), adversary_target_->mutable_params(), c.tau);
  }
  notify(UpdatePhase::kTargets);
  return stats;
}

Checkpoint Learner::MakeCheckpoint(long env_steps) const {
  Checkpoint ckpt;
  ckpt.env_steps = env_steps;
  ckpt.log_alpha = temperature_.log_alpha;
  ckpt.config_text = SerializeConfig(config_);
  ckpt.networks.emplace_back("critic", critic_);
  ckpt.networks.emplace_back("critic_target", critic_target_);
  ckpt.networks.emplace_back("protagonist", protagonist_.params());
  ckpt.networks.emplace_back("protagonist_target", protagonist_target_.params());
  if (adversary_) {
    ckpt.networks.emplace_back("adversary", adversary_->params());
    ckpt.networks.emplace_back("adversary_target", adversary_target_->params());
  }
  return ckpt;
}

RunArtifacts Train(const TrainConfig& config, const TrainHooks& hooks) {
  config.Validate();
  RunArtifacts artifacts;
  artifacts.config = config;

  Rng init_rng = MakeRng(config.seed, RngStream::kInit);
  Rng env_rng = MakeRng(config.seed, RngStream::kEnv);
  Rng action_rng = MakeRng(config.seed, RngStream::kAction);
  Rng update_rng = MakeRng(config.seed, RngStream::kUpdate);

  Learner learner(config, init_rng);
  ReplayBuffer buffer(config.buffer_capacity);
  IntersectionEnv env(config.env);
  env.Reset(env_rng);

  artifacts.checkpoints.push_back(learner.MakeCheckpoint(0));

  std::deque<double> recent_returns;
  double episode_return = 0.0;
  long iteration = 0;

  double critic_sum = 0.0, protagonist_sum = 0.0, adversary_sum = 0.0;
  long updates_since_log = 0;

  for (long step = 0; step < config.total_steps; ++step) {
    const Observation obs = env.observation();
    const Eigen::VectorXd obs_dyn = obs;
    const ActionSample a = SampleAction(learner.protagonist(), obs_dyn, action_rng);
    Eigen::Vector2d u_phys;
    Eigen::Vector2d u_norm;
    if (learner.has_adversary()) {
      const ActionSample u = SampleAction(learner.adversary(), obs_dyn, action_rng);
      u_phys = u.physical;
      u_norm = u.normalized;
    } else {
      u_phys = ScriptedAdversary(AdversaryMode::kTrainRandom, config.env, env_rng);
      u_norm = u_phys / config.env.adversary_accel_bound;
    }
    const StepOutcome outcome = env.Step(a.physical[0], u_phys);

    Transition t;
    t.observation = obs;
    t.protagonist_action = a.normalized[0];
    t.adversary_action = u_norm;
    t.reward = outcome.reward;
    t.next_observation = env.observation();
    t.done = IsTerminal(outcome.kind);
    buffer.Push(t);

    episode_return += outcome.reward;
    if (outcome.done) {
      artifacts.episode_returns.push_back(episode_return);
      recent_returns.push_back(episode_return);
      if (static_cast<int>(recent_returns.size()) > config.return_window) {
        recent_returns.pop_front();
      }
      episode_return = 0.0;
      env.Reset(env_rng);
    }

    const LearningRates rates = ScheduledLearningRates(config, step);
    if (buffer.size() >= config.batch_size) {
      for (int k = 0; k < config.updates_per_env_step; ++k) {
        const std::vector<Transition> batch = buffer.SampleBatch(config.batch_size, update_rng);
        UpdateStats stats;
        try {
          stats = learner.UpdateRound(batch, rates, update_rng, hooks.on_phase);
        } catch (const NonFiniteError& e) {
          throw TrainingDivergedError("training diverged at env step " + std::to_string(step) +
                                      ": " + e.what() + " (" + BatchDiagnostics(batch) + ")");
        } catch (const std::domain_error& e) {
          throw TrainingDivergedError("training diverged at env step " + std::to_string(step) +
                                      ": " + e.what() + " (" + BatchDiagnostics(batch) + ")");
        }
        ++iteration;
        ++updates_since_log;
        critic_sum += stats.critic_loss;
        protagonist_sum += stats.protagonist_loss;
        adversary_sum += stats.adversary_loss;
      }
    }

    const long env_steps = step + 1;
    if (env_steps % config.log_interval == 0 || env_steps == config.total_steps) {
      TrainingLogRow row;
      row.iteration = iteration;
      row.env_steps = env_steps;
      row.avg_return = recent_returns.empty()
                           ? kNaN
                           : Mean(std::vector<double>(recent_returns.begin(),
                                                      recent_returns.end()));
      const double n = static_cast<double>(updates_since_log);
      row.critic_loss = n > 0 ? critic_sum / n : kNaN;
      row.protagonist_loss = n > 0 ? protagonist_sum / n : kNaN;
      row.adversary_loss = n > 0 && learner.has_adversary() ? adversary_sum / n : kNaN;
      row.alpha = learner.temperature().alpha();
      row.actor_lr = rates.actor;
      row.critic_lr = rates.critic;
      row.alpha_lr = rates.alpha;
      artifacts.log.push_back(row);
      if (hooks.on_log) hooks.on_log(row);
      critic_sum = protagonist_sum = adversary_sum = 0.0;
      updates_since_log = 0;
    }
    if (env_steps % config.eval_interval == 0 || env_steps == config.total_steps) {
      artifacts.checkpoints.push_back(learner.MakeCheckpoint(env_steps));
    }
  }

  if (hooks.final_evaluation) {
    Rng eval_rng = MakeRng(config.seed, RngStream::kEval);
    for (AdversaryMode mode : {AdversaryMode::kAggressive, AdversaryMode::kConservative,
                               AdversaryMode::kRandom, AdversaryMode::kTrainRandom}) {
      artifacts.evaluations.push_back(
          Evaluate(learner.protagonist(), mode, config.eval_episodes, config.env, eval_rng));
    }
  }
  return artifacts;
}

}  // namespace minimax_dsac
