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

#include "minimax_dsac/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace minimax_dsac {

double Mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of an empty sample");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double SampleStd(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

WelchResult WelchTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("welch t-test needs at least two values per sample");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = std::pow(SampleStd(a), 2) / na;
  const double vb = std::pow(SampleStd(b), 2) / nb;
  const double se2 = va + vb;
  if (!(se2 > 0.0)) throw std::invalid_argument("welch t-test: both samples have zero variance");

  WelchResult r;
  r.t = (Mean(a) - Mean(b)) / std::sqrt(se2);
  r.degrees_of_freedom = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  const boost::math::students_t dist(r.degrees_of_freedom);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t))));
  return r;
}

ConfidenceBand ComputeConfidenceBand(const std::vector<std::vector<double>>& curves) {
  if (curves.empty()) throw std::invalid_argument("confidence band needs at least one curve");
  const std::size_t len = curves.front().size();
  for (const auto& c : curves) {
    if (c.size() != len) throw std::invalid_argument("confidence band curves differ in length");
  }
  const double n = static_cast<double>(curves.size());
  ConfidenceBand band;
  std::vector<double> column(curves.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t k = 0; k < curves.size(); ++k) column[k] = curves[k][i];
    const double m = Mean(column);
    const double half = 1.96 * SampleStd(column) / std::sqrt(n);
    band.mean.push_back(m);
    band.lower.push_back(m - half);
    band.upper.push_back(m + half);
  }
  return band;
}

}  // namespace minimax_dsac
