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

#ifndef MINIMAX_DSAC_CONFIG_H_
#define MINIMAX_DSAC_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "minimax_dsac/activation.h"
#include "minimax_dsac/intersection_env.h"

namespace minimax_dsac {

enum class Algorithm {
  kDsac,         // protagonist only, scripted random adversaries
  kMinimaxDsac,  // protagonist and learned adversary
};

std::string AlgorithmName(Algorithm algorithm);
// Accepts dsac and minimax-dsac.
Algorithm ParseAlgorithm(std::string_view name);

// Training hyperparameters. Defaults follow the reference setup: buffer 500,
// batch 256, GELU MLPs with two 256-unit hidden layers, Adam(0.9, 0.999),
// linearly decayed learning rates, gamma 0.99, tau 0.001, clip bound 20,
// risk weights 0.1.
struct TrainConfig {
  Algorithm algorithm = Algorithm::kMinimaxDsac;
  std::uint64_t seed = 0;
  long total_steps = 100000;
  int updates_per_env_step = 1;
  long eval_interval = 10000;
  int eval_episodes = 20;
  long log_interval = 1000;
  int return_window = 20;

  std::size_t buffer_capacity = 500;
  std::size_t batch_size = 256;
  std::vector<int> hidden_widths = {256, 256};
  Activation activation = Activation::kGelu;

  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  double actor_lr_start = 5e-5;
  double actor_lr_end = 5e-6;
  double critic_lr_start = 1e-4;
  double critic_lr_end = 1e-5;
  double alpha_lr_start = 5e-5;
  double alpha_lr_end = 5e-6;

  double gamma = 0.99;
  double tau = 0.001;
  double target_entropy = -1.0;
  double clip_boundary = 20.0;
  double lambda_a = 0.1;
  double lambda_u = 0.1;
  double initial_alpha = 0.01;
  double sigma_min = 1e-3;
  double log_std_min = -5.0;
  double log_std_max = 2.0;

  EnvConfig env;

  // Throws std::invalid_argument describing the first violated constraint.
  void Validate() const;
};

// Flat "key = value" text, '#' starts a comment. Keys not mentioned keep their
// defaults; unknown keys and malformed values throw std::invalid_argument
// naming the line. Environment keys carry an "env." prefix.
TrainConfig ParseConfig(std::string_view text);
TrainConfig LoadConfig(const std::filesystem::path& path);

// Every addressable key, in a stable order; ParseConfig(SerializeConfig(c))
// reproduces c exactly.
std::string SerializeConfig(const TrainConfig& config);

// Applies one key/value pair.
void SetConfigValue(TrainConfig& config, std::string_view key, std::string_view value);

std::vector<std::string> ConfigKeys();

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_CONFIG_H_
