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

#ifndef MINIMAX_DSAC_CHECKPOINT_H_
#define MINIMAX_DSAC_CHECKPOINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minimax_dsac/mlp.h"

namespace minimax_dsac {

inline constexpr std::uint32_t kCheckpointVersion = 1;

// Snapshot of every learned quantity at one point of a run.
//
// Binary layout, all integers and floats little-endian:
//   "MDSACKPT" | u32 version | i64 env_steps | f64 log_alpha
//   | u64 config length | config text (key = value lines)
//   | u32 network count | per network:
//       u32 name length | name | u32 input width | u32 hidden count
//       | u32 hidden widths... | u32 output width | u32 activation
//       | u64 parameter count | f64 parameters...
struct Checkpoint {
  std::int64_t env_steps = 0;
  double log_alpha = 0.0;
  std::string config_text;
  std::vector<std::pair<std::string, NetParams>> networks;

  // nullptr if absent.
  const NetParams* Find(std::string_view name) const;
};

std::string SerializeCheckpoint(const Checkpoint& checkpoint);
// Throws std::runtime_error on a malformed or truncated buffer.
Checkpoint DeserializeCheckpoint(std::string_view bytes);

void SaveCheckpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint LoadCheckpoint(const std::filesystem::path& path);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_CHECKPOINT_H_
