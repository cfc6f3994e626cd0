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

#include "minimax_dsac/replay_buffer.h"

#include <cmath>
#include <deque>
#include <vector>

#include "gtest/gtest.h"

namespace minimax_dsac {
namespace {

Transition Tagged(double tag) {
  Transition t;
  t.reward = tag;
  t.observation.setConstant(tag);
  return t;
}

TEST(ReplayBufferTest, PushToEmpty) {
  ReplayBuffer buffer(4);
  EXPECT_TRUE(buffer.empty());
  buffer.Push(Tagged(1));
  EXPECT_EQ(buffer.size(), 1u);
  EXPECT_DOUBLE_EQ(buffer.at(0).reward, 1.0);
}

TEST(ReplayBufferTest, EvictsOldestAtCapacity) {
  ReplayBuffer buffer(500);
  for (int i = 0; i < 501; ++i) buffer.Push(Tagged(i));
  EXPECT_EQ(buffer.size(), 500u);
  EXPECT_DOUBLE_EQ(buffer.at(0).reward, 1.0);
  EXPECT_DOUBLE_EQ(buffer.at(499).reward, 500.0);
  for (std::size_t i = 0; i < buffer.size(); ++i) EXPECT_NE(buffer.at(i).reward, 0.0);
}

TEST(ReplayBufferTest, MatchesDequeOracle) {
  Rng rng(1);
  std::uniform_int_distribution<int> cap_dist(1, 40);
  for (int round = 0; round < 5; ++round) {
    const std::size_t capacity = cap_dist(rng);
    ReplayBuffer buffer(capacity);
    std::deque<double> oracle;
    for (int op = 0; op < 2000; ++op) {
      const double tag = op + 1000.0 * round;
      buffer.Push(Tagged(tag));
      oracle.push_back(tag);
      if (oracle.size() > capacity) oracle.pop_front();
      ASSERT_EQ(buffer.size(), oracle.size());
      if (op % 97 == 0) {
        for (std::size_t i = 0; i < oracle.size(); ++i) ASSERT_EQ(buffer.at(i).reward, oracle[i]);
      }
    }
  }
}

TEST(ReplayBufferTest, SampleRequiresWarmup) {
  ReplayBuffer buffer(10);
  Rng rng(2);
  buffer.Push(Tagged(1));
  EXPECT_THROW(buffer.SampleBatch(2, rng), WarmupIncompleteError);
  auto one = buffer.SampleBatch(1, rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_DOUBLE_EQ(one[0].reward, 1.0);
}

TEST(ReplayBufferTest, ZeroCapacityRejected) {
  EXPECT_THROW(ReplayBuffer(0), std::invalid_argument);
}

TEST(ReplayBufferTest, SamplingIsDeterministicAndNonMutating) {
  ReplayBuffer buffer(10);
  for (int i = 0; i < 10; ++i) buffer.Push(Tagged(i));
  Rng a(3), b(3);
  auto x = buffer.SampleBatch(10, a);
  auto y = buffer.SampleBatch(10, b);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(x[i].reward, y[i].reward);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(buffer.at(i).reward, i);
}

TEST(ReplayBufferTest, SamplingIsUniform) {
  // Chi-square goodness of fit over 10^5 draws; 9 dof, 0.999 quantile is 27.88.
  ReplayBuffer buffer(10);
  for (int i = 0; i < 10; ++i) buffer.Push(Tagged(i));
  Rng rng(4);
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 10000; ++i) {
    for (const Transition& t : buffer.SampleBatch(10, rng)) ++counts[static_cast<int>(t.reward)];
  }
  double chi2 = 0.0;
  for (int c : counts) {
    chi2 += (c - 1e4) * (c - 1e4) / 1e4;
    EXPECT_NEAR(c, 1e4, 3 * std::sqrt(1e4 * 0.9));
  }
  EXPECT_LT(chi2, 27.88);
}

}  // namespace
}  // namespace minimax_dsac
