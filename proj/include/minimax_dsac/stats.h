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

#ifndef MINIMAX_DSAC_STATS_H_
#define MINIMAX_DSAC_STATS_H_

#include <span>
#include <vector>

namespace minimax_dsac {

double Mean(std::span<const double> values);
// Unbiased (n - 1) standard deviation; 0 for fewer than two values.
double SampleStd(std::span<const double> values);

struct WelchResult {
  double t = 0.0;
  double p = 1.0;
  double degrees_of_freedom = 0.0;
};

// Two-sided Welch unequal-variance t-test with Welch-Satterthwaite degrees of
// freedom. t is positive when sample_a has the larger mean. Throws
// std::invalid_argument for samples smaller than two or zero total variance.
WelchResult WelchTTest(std::span<const double> sample_a, std::span<const double> sample_b);

// Pointwise mean +/- 1.96 * std / sqrt(n) over equally long curves.
struct ConfidenceBand {
  std::vector<double> mean;
  std::vector<double> lower;
  std::vector<double> upper;
};

ConfidenceBand ComputeConfidenceBand(const std::vector<std::vector<double>>& curves);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_STATS_H_
