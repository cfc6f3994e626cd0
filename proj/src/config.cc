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

#include "minimax_dsac/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "minimax_dsac/csv.h"

namespace minimax_dsac {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ToDouble(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int ToInt(std::string_view text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> ToIntList(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(ToInt<int>(Trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string FromIntList(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

struct Field {
  std::string key;
  std::function<void(TrainConfig&, std::string_view)> set;
  std::function<std::string(const TrainConfig&)> get;
};

template <typename T>
Field NumberField(std::string key, T TrainConfig::*member) {
  return {std::move(key),
          [member](TrainConfig& c, std::string_view v) {
            if constexpr (std::is_floating_point_v<T>) {
              c.*member = ToDouble(v);
            } else {
              c.*member = ToInt<T>(v);
            }
          },
          [member](const TrainConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return FormatDouble(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          }};
}

template <typename T>
Field EnvField(std::string key, T EnvConfig::*member) {
  return {"env." + key,
          [member](TrainConfig& c, std::string_view v) {
            if constexpr (std::is_floating_point_v<T>) {
              c.env.*member = ToDouble(v);
            } else {
              c.env.*member = ToInt<T>(v);
            }
          },
          [member](const TrainConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return FormatDouble(c.env.*member);
            } else {
              return std::to_string(c.env.*member);
            }
          }};
}

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = [] {
    std::vector<Field> f;
    f.push_back({"algo",
                 [](TrainConfig& c, std::string_view v) { c.algorithm = ParseAlgorithm(v); },
                 [](const TrainConfig& c) { return AlgorithmName(c.algorithm); }});
    f.push_back(NumberField("seed", &TrainConfig::seed));
    f.push_back(NumberField("total_steps", &TrainConfig::total_steps));
    f.push_back(NumberField("updates_per_env_step", &TrainConfig::updates_per_env_step));
    f.push_back(NumberField("eval_interval", &TrainConfig::eval_interval));
    f.push_back(NumberField("eval_episodes", &TrainConfig::eval_episodes));
    f.push_back(NumberField("log_interval", &TrainConfig::log_interval));
    f.push_back(NumberField("return_window", &TrainConfig::return_window));
    f.push_back(NumberField("buffer_capacity", &TrainConfig::buffer_capacity));
    f.push_back(NumberField("batch_size", &TrainConfig::batch_size));
    f.push_back({"hidden_widths",
                 [](TrainConfig& c, std::string_view v) { c.hidden_widths = ToIntList(v); },
                 [](const TrainConfig& c) { return FromIntList(c.hidden_widths); }});
    f.push_back({"activation",
                 [](TrainConfig& c, std::string_view v) { c.activation = ParseActivation(v); },
                 [](const TrainConfig& c) { return ActivationName(c.activation); }});
    f.push_back(NumberField("adam_beta1", &TrainConfig::adam_beta1));
    f.push_back(NumberField("adam_beta2", &TrainConfig::adam_beta2));
    f.push_back(NumberField("adam_epsilon", &TrainConfig::adam_epsilon));
    f.push_back(NumberField("actor_lr_start", &TrainConfig::actor_lr_start));
    f.push_back(NumberField("actor_lr_end", &TrainConfig::actor_lr_end));
    f.push_back(NumberField("critic_lr_start", &TrainConfig::critic_lr_start));
    f.push_back(NumberField("critic_lr_end", &TrainConfig::critic_lr_end));
    f.push_back(NumberField("alpha_lr_start", &TrainConfig::alpha_lr_start));
    f.push_back(NumberField("alpha_lr_end", &TrainConfig::alpha_lr_end));
    f.push_back(NumberField("gamma", &TrainConfig::gamma));
    f.push_back(NumberField("tau", &TrainConfig::tau));
    f.push_back(NumberField("target_entropy", &TrainConfig::target_entropy));
    f.push_back(NumberField("clip_boundary", &TrainConfig::clip_boundary));
    f.push_back(NumberField("lambda_a", &TrainConfig::lambda_a));
    f.push_back(NumberField("lambda_u", &TrainConfig::lambda_u));
    f.push_back(NumberField("initial_alpha", &TrainConfig::initial_alpha));
    f.push_back(NumberField("sigma_min", &TrainConfig::sigma_min));
    f.push_back(NumberField("log_std_min", &TrainConfig::log_std_min));
    f.push_back(NumberField("log_std_max", &TrainConfig::log_std_max));
    f.push_back(EnvField("dt", &EnvConfig::dt));
    f.push_back(EnvField("protagonist_initial_distance", &EnvConfig::protagonist_initial_distance));
    f.push_back(EnvField("protagonist_speed_min", &EnvConfig::protagonist_speed_min));
    f.push_back(EnvField("protagonist_speed_max", &EnvConfig::protagonist_speed_max));
    f.push_back(EnvField("adversary_distance_min", &EnvConfig::adversary_distance_min));
    f.push_back(EnvField("adversary_distance_max", &EnvConfig::adversary_distance_max));
    f.push_back(EnvField("adversary_speed_min", &EnvConfig::adversary_speed_min));
    f.push_back(EnvField("adversary_speed_max", &EnvConfig::adversary_speed_max));
    f.push_back(EnvField("protagonist_accel_bound", &EnvConfig::protagonist_accel_bound));
    f.push_back(EnvField("adversary_accel_bound", &EnvConfig::adversary_accel_bound));
    f.push_back(EnvField("max_speed", &EnvConfig::max_speed));
    f.push_back(EnvField("conflict_point_1", &EnvConfig::conflict_point_1));
    f.push_back(EnvField("conflict_point_2", &EnvConfig::conflict_point_2));
    f.push_back(EnvField("collision_half_length", &EnvConfig::collision_half_length));
    f.push_back(EnvField("pass_threshold", &EnvConfig::pass_threshold));
    f.push_back(EnvField("max_episode_steps", &EnvConfig::max_episode_steps));
    f.push_back(EnvField("distance_scale", &EnvConfig::distance_scale));
    f.push_back(EnvField("speed_scale", &EnvConfig::speed_scale));
    return f;
  }();
  return fields;
}

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kDsac ? "dsac" : "minimax-dsac";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "dsac") return Algorithm::kDsac;
  if (name == "minimax-dsac" || name == "minimax_dsac") return Algorithm::kMinimaxDsac;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void TrainConfig::Validate() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("train config: ") + msg);
  };
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  require(tau > 0.0 && tau <= 1.0, "tau must lie in (0, 1]");
  require(total_steps >= 0, "total_steps must be non-negative");
  require(updates_per_env_step >= 1, "updates_per_env_step must be at least 1");
  require(eval_interval > 0 && log_interval > 0, "intervals must be positive");
  require(eval_episodes > 0, "eval_episodes must be positive");
  require(return_window > 0, "return_window must be positive");
  require(buffer_capacity > 0, "buffer_capacity must be positive");
  require(batch_size > 0, "batch_size must be positive");
  require(batch_size <= buffer_capacity, "batch_size cannot exceed buffer_capacity");
  for (int w : hidden_widths) require(w > 0, "hidden widths must be positive");
  require(adam_beta1 >= 0.0 && adam_beta1 < 1.0, "adam_beta1 must lie in [0, 1)");
  require(adam_beta2 >= 0.0 && adam_beta2 < 1.0, "adam_beta2 must lie in [0, 1)");
  require(adam_epsilon > 0.0, "adam_epsilon must be positive");
  // Learning rates may be zero to freeze learning.
  require(actor_lr_start >= 0.0 && actor_lr_end >= 0.0 && actor_lr_end <= actor_lr_start,
          "actor learning-rate schedule must be non-negative and non-increasing");
  require(critic_lr_start >= 0.0 && critic_lr_end >= 0.0 && critic_lr_end <= critic_lr_start,
          "critic learning-rate schedule must be non-negative and non-increasing");
  require(alpha_lr_start >= 0.0 && alpha_lr_end >= 0.0 && alpha_lr_end <= alpha_lr_start,
          "alpha learning-rate schedule must be non-negative and non-increasing");
  require(clip_boundary > 0.0, "clip_boundary must be positive");
  require(lambda_a >= 0.0 && lambda_u >= 0.0, "risk weights must be non-negative");
  require(initial_alpha > 0.0, "initial_alpha must be positive");
  require(sigma_min > 0.0, "sigma_min must be positive");
  require(log_std_min < log_std_max, "log_std_min must be below log_std_max");
  env.Validate();
}

void SetConfigValue(TrainConfig& config, std::string_view key, std::string_view value) {
  for (const Field& f : Fields()) {
    if (f.key == key) {
      f.set(config, value);
      return;
    }
  }
  throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

TrainConfig ParseConfig(std::string_view text) {
  TrainConfig config;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected 'key = value'");
    }
    try {
      SetConfigValue(config, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_number) + ": " +
                                  e.what());
    }
  }
  return config;
}

TrainConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string SerializeConfig(const TrainConfig& config) {
  std::string out;
  for (const Field& f : Fields()) out += f.key + " = " + f.get(config) + "\n";
  return out;
}

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const Field& f : Fields()) keys.push_back(f.key);
  return keys;
}

}  // namespace minimax_dsac
