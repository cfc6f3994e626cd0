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

#include "minimax_dsac/updates.h"

#include <stdexcept>

namespace minimax_dsac {

void SoftUpdateInPlace(const NetParams& online, NetParams& target, double tau) {
  if (!(online.architecture() == target.architecture())) {
    throw std::invalid_argument("soft update: online and target shapes differ");
  }
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("soft update: tau must lie in (0, 1]");
  auto t = target.mutable_values();
  const Eigen::VectorXd& x = online.values();
  for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = tau * x[i] + (1.0 - tau) * t[i];
}

NetParams SoftUpdate(const NetParams& online, const NetParams& target, double tau) {
  NetParams result = target;
  SoftUpdateInPlace(online, result, tau);
  return result;
}

double LinearSchedule(double start, double end, long step, long total) {
  if (total <= 0) throw std::invalid_argument("schedule total must be positive");
  if (step < 0 || step > total) throw std::invalid_argument("schedule step out of range");
  return start + (end - start) * static_cast<double>(step) / static_cast<double>(total);
}

}  // namespace minimax_dsac
