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

#ifndef MINIMAX_DSAC_UPDATES_H_
#define MINIMAX_DSAC_UPDATES_H_

#include "minimax_dsac/mlp.h"

namespace minimax_dsac {

// target' = tau * online + (1 - tau) * target, elementwise.
NetParams SoftUpdate(const NetParams& online, const NetParams& target, double tau);
// In-place variant used by the trainer.
void SoftUpdateInPlace(const NetParams& online, NetParams& target, double tau);

// Linear interpolation start + (end - start) * step / total.
double LinearSchedule(double start, double end, long step, long total);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_UPDATES_H_
