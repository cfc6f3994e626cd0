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

#include "minimax_dsac/critic.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "minimax_dsac/errors.h"
#include "minimax_dsac/policy.h"
#include "test_support.h"

namespace minimax_dsac {
namespace {

using testing::CentralDifference;
using testing::CompareGradients;
using testing::RandomActions;
using testing::RandomObservations;
using testing::RandomParams;

double OracleSoftplus(double x) { return std::log1p(std::exp(x)); }

double OracleNll(double y, double m, double s) {
  return (y - m) * (y - m) / (2 * s * s) + std::log(s) + 0.5 * std::log(2 * std::numbers::pi);
}

Eigen::MatrixXd RandomCriticInputs(int batch, Rng& rng) {
  return AssembleCriticInputs(RandomObservations(batch, rng), RandomActions(1, batch, rng),
                              RandomActions(2, batch, rng));
}

TEST(CriticTest, StdFromRawIsSoftplusPlusFloor) {
  for (double raw : {-40.0, -3.0, 0.0, 0.7, 5.0}) {
    EXPECT_NEAR(StdFromRaw(raw, 1e-3), 1e-3 + OracleSoftplus(raw), 1e-14);
  }
  EXPECT_DOUBLE_EQ(StdFromRaw(800.0, 1e-3), 800.0 + 1e-3);
  EXPECT_GE(StdFromRaw(-800.0, 1e-3), 1e-3);
}

TEST(CriticTest, NllAtMeanWithUnitStd) {
  EXPECT_NEAR(GaussianNll(3.5, 3.5, 1.0), 0.5 * std::log(2 * std::numbers::pi), 1e-12);
  EXPECT_NEAR(GaussianNll(1.0, -2.0, 0.5), OracleNll(1.0, -2.0, 0.5), 1e-12);
}

TEST(CriticTest, AssembleStacksRows) {
  Eigen::MatrixXd obs = Eigen::MatrixXd::Constant(6, 2, 1.0);
  Eigen::MatrixXd a(1, 2);
  a << 0.1, 0.2;
  Eigen::MatrixXd u(2, 2);
  u << 0.3, 0.4, 0.5, 0.6;
  Eigen::MatrixXd in = AssembleCriticInputs(obs, a, u);
  ASSERT_EQ(in.rows(), 9);
  EXPECT_DOUBLE_EQ(in(6, 1), 0.2);
  EXPECT_DOUBLE_EQ(in(8, 0), 0.5);
  CriticInput single;
  single.protagonist_action = 0.1;
  single.adversary_action << 0.3, 0.5;
  single.observation.setOnes();
  EXPECT_TRUE(single.Flatten().isApprox(in.col(0)));
}

TEST(CriticTest, ForwardMatchesOracle) {
  Rng rng(1);
  const Architecture arch = CriticArchitecture({8, 8});
  NetParams critic = RandomParams(arch, rng);
  Eigen::MatrixXd inputs = RandomCriticInputs(5, rng);
  CriticBatchOutput out = CriticForwardBatch(critic, inputs);
  for (int i = 0; i < 5; ++i) {
    std::vector<double> x(inputs.col(i).data(), inputs.col(i).data() + 9);
    auto raw = testing::OracleForward(arch, critic.values(), x);
    EXPECT_NEAR(out.mean[i], raw[0], 1e-12);
    EXPECT_NEAR(out.std[i], 1e-3 + OracleSoftplus(raw[1]), 1e-12);
  }
}

TEST(CriticTest, LossMatchesOracleAndFiniteDifferences) {
  Rng rng(2);
  const Architecture arch = CriticArchitecture({8, 8});
  for (int trial = 0; trial < 10; ++trial) {
    NetParams critic = RandomParams(arch, rng);
    Eigen::MatrixXd inputs = RandomCriticInputs(6, rng);
    Eigen::VectorXd targets = 3.0 * Eigen::VectorXd::Random(6);
    LossAndGrad lg = CriticLossAndGrad(critic, inputs, targets);

    CriticBatchOutput out = CriticForwardBatch(critic, inputs);
    double expect = 0.0;
    for (int i = 0; i < 6; ++i) expect += OracleNll(targets[i], out.mean[i], out.std[i]) / 6;
    EXPECT_NEAR(lg.loss, expect, 1e-10);

    auto f = [&](const Eigen::VectorXd& theta) {
      return CriticLossAndGrad(NetParams(arch, theta), inputs, targets).loss;
    };
    auto check = CompareGradients(lg.grads, CentralDifference(f, critic.values()));
    EXPECT_TRUE(check.ok) << "worst " << check.worst_error << " at " << check.worst_index;
  }
}

TEST(CriticTest, ClipTarget) {
  EXPECT_DOUBLE_EQ(ClipTarget(100.0, 5.0, 20.0), 25.0);
  EXPECT_DOUBLE_EQ(ClipTarget(-100.0, 5.0, 20.0), -15.0);
  EXPECT_DOUBLE_EQ(ClipTarget(7.0, 5.0, 20.0), 7.0);
  EXPECT_DOUBLE_EQ(ClipTarget(25.0, 5.0, 20.0), 25.0);
}

TEST(CriticTest, ClippedLossUsesClampedTargets) {
  Rng rng(3);
  const Architecture arch = CriticArchitecture({8});
  NetParams critic = RandomParams(arch, rng);
  Eigen::MatrixXd inputs = RandomCriticInputs(4, rng);
  Eigen::VectorXd raw(4);
  raw << 500.0, -500.0, 0.3, 1.0;
  ClippedCriticLoss c = ClippedCriticLossAndGrad(critic, inputs, raw, 20.0);
  for (int i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(c.clipped_targets[i], ClipTarget(raw[i], c.q_current[i], 20.0));
  }
  LossAndGrad direct = CriticLossAndGrad(critic, inputs, c.clipped_targets);
  EXPECT_DOUBLE_EQ(c.loss.loss, direct.loss);
  EXPECT_TRUE(c.loss.grads.isApprox(direct.grads));
}

TEST(CriticTest, NonFiniteTargetIsReported) {
  Rng rng(4);
  NetParams critic = RandomParams(CriticArchitecture({4}), rng);
  Eigen::MatrixXd inputs = RandomCriticInputs(3, rng);
  Eigen::VectorXd targets(3);
  targets << 0.0, std::nan(""), 1.0;
  try {
    CriticLossAndGrad(critic, inputs, targets);
    FAIL() << "expected NonFiniteError";
  } catch (const NonFiniteError& e) {
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(CriticTest, TerminalTargetIsReward) {
  Rng rng(5);
  NetParams critic = RandomParams(CriticArchitecture({4}), rng);
  StochasticPolicy pi(RandomParams(PolicyArchitecture(1, {4}), rng), Eigen::VectorXd::Constant(1, 3.0));
  Transition t;
  t.reward = -110.0;
  t.done = true;
  EXPECT_DOUBLE_EQ(TdTarget({critic, pi, nullptr}, t, {0.5, 0.99}, rng), -110.0);
}

TEST(CriticTest, NonTerminalTargetWithZeroStdCritic) {
  // Critic output is a constant mean 4 with std pinned at the floor, so the
  // target is r + gamma * (4 - alpha * log pi(a')) up to floor-sized noise.
  Rng rng(6);
  const Architecture arch = CriticArchitecture({4});
  NetParams critic(arch);
  critic.mutable_bias(1)[0] = 4.0;
  critic.mutable_bias(1)[1] = -60.0;
  StochasticPolicy pi(RandomParams(PolicyArchitecture(1, {4}), rng), Eigen::VectorXd::Constant(1, 3.0));
  Transition t;
  t.observation.setConstant(0.5);
  t.next_observation.setConstant(0.4);
  t.reward = -1.0;
  t.done = false;
  const double gamma = 0.9;
  const double y0 = TdTarget({critic, pi, nullptr}, t, {0.0, gamma}, rng);
  EXPECT_NEAR(y0, -1.0 + gamma * 4.0, 0.01);
}

}  // namespace
}  // namespace minimax_dsac
