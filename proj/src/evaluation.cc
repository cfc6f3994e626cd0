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

#include "minimax_dsac/evaluation.h"

#include <limits>
#include <stdexcept>

#include "minimax_dsac/stats.h"

namespace minimax_dsac {

StochasticPolicy MakeProtagonist(NetParams params, const EnvConfig& config,
                                 PolicyOptions options) {
  return StochasticPolicy(std::move(params),
                          Eigen::VectorXd::Constant(1, config.protagonist_accel_bound), options);
}

StochasticPolicy MakeAdversary(NetParams params, const EnvConfig& config,
                               PolicyOptions options) {
  return StochasticPolicy(std::move(params),
                          Eigen::VectorXd::Constant(2, config.adversary_accel_bound), options);
}

EvalSummary Summarize(AdversaryMode mode, std::vector<EpisodeRecord> episodes,
                      const EnvConfig& config) {
  EvalSummary s;
  s.mode = mode;
  int passes = 0;
  int collisions = 0;
  double crossing = 0.0;
  for (const EpisodeRecord& e : episodes) {
    s.returns.push_back(e.episode_return);
    if (e.outcome == OutcomeKind::kPass) {
      ++passes;
      crossing += e.steps * config.dt;
    } else if (e.outcome == OutcomeKind::kCollision) {
      ++collisions;
    }
  }
  const double n = static_cast<double>(episodes.size());
  s.mean = s.returns.empty() ? 0.0 : Mean(s.returns);
  s.std = SampleStd(s.returns);
  s.pass_rate = n > 0 ? passes / n : 0.0;
  s.collision_rate = n > 0 ? collisions / n : 0.0;
  s.mean_crossing_time =
      passes > 0 ? crossing / passes : std::numeric_limits<double>::quiet_NaN();
  s.episodes = std::move(episodes);
  return s;
}

EvalSummary Evaluate(const StochasticPolicy& protagonist, AdversaryMode mode, int episodes,
                     const EnvConfig& config, Rng& rng) {
  if (episodes <= 0) throw std::invalid_argument("evaluation needs a positive episode count");
  IntersectionEnv env(config);
  std::vector<EpisodeRecord> records;
  records.reserve(static_cast<std::size_t>(episodes));
  for (int ep = 0; ep < episodes; ++ep) {
    EpisodeRecord record;
    record.initial_state = env.Reset(rng);
    for (;;) {
      const Eigen::VectorXd obs = env.observation();
      const double accel =
          protagonist.action_scale()[0] * DeterministicAction(protagonist, obs)[0];
      const Eigen::Vector2d u = ScriptedAdversary(mode, config, rng);
      const StepOutcome outcome = env.Step(accel, u);
      record.protagonist_actions.push_back(accel);
      record.adversary_actions.push_back(u);
      record.episode_return += outcome.reward;
      ++record.steps;
      record.trajectory.push_back(
          {record.steps * config.dt, env.state(), accel, u, outcome.reward, outcome.kind});
      if (outcome.done) {
        record.outcome = outcome.kind;
        break;
      }
    }
    records.push_back(std::move(record));
  }
  return Summarize(mode, std::move(records), config);
}

EvalSummary Evaluate(const NetParams& protagonist, AdversaryMode mode, int episodes,
                     const EnvConfig& config, Rng& rng) {
  return Evaluate(MakeProtagonist(protagonist, config), mode, episodes, config, rng);
}

}  // namespace minimax_dsac
