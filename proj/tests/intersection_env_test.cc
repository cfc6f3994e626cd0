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

#include "minimax_dsac/intersection_env.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "test_support.h"

namespace minimax_dsac {
namespace {

EnvState MakeState(double dp, double vp, double d1, double v1, double d2, double v2, int step = 0) {
  EnvState s;
  s.protagonist = {dp, vp};
  s.adversary1 = {d1, v1};
  s.adversary2 = {d2, v2};
  s.step_count = step;
  return s;
}

TEST(IntersectionEnvTest, KinematicsExample) {
  EnvConfig cfg;
  StepResult r = StepState(MakeState(25, 5, 30, 0, 30, 0), 0.0, Eigen::Vector2d::Zero(), cfg);
  EXPECT_NEAR(r.state.protagonist.distance, 24.5, 1e-12);
  EXPECT_DOUBLE_EQ(r.state.protagonist.speed, 5.0);
  EXPECT_EQ(r.state.step_count, 1);
  EXPECT_EQ(r.outcome.kind, OutcomeKind::kRunning);
  EXPECT_DOUBLE_EQ(r.outcome.reward, -1.0);
}

TEST(IntersectionEnvTest, NoReversingAndSpeedCap) {
  EnvConfig cfg;
  StepResult r = StepState(MakeState(10, 0, 30, 11.9, 30, 0), -2.0, Eigen::Vector2d(2.0, 0.0), cfg);
  EXPECT_DOUBLE_EQ(r.state.protagonist.speed, 0.0);
  EXPECT_DOUBLE_EQ(r.state.protagonist.distance, 10.0);
  EXPECT_DOUBLE_EQ(r.state.adversary1.speed, 12.0);
}

TEST(IntersectionEnvTest, OutOfBoundAccelerationIsClampedAndCounted) {
  EnvConfig cfg;
  StepDiagnostics diag;
  StepResult r = StepState(MakeState(20, 5, 30, 5, 30, 5), 10.0, Eigen::Vector2d(-7.0, 1.0), cfg, &diag);
  EXPECT_EQ(diag.clamped_accelerations, 2);
  EXPECT_NEAR(r.state.protagonist.speed, 5.3, 1e-12);
  EXPECT_NEAR(r.state.adversary1.speed, 4.8, 1e-12);
}

TEST(IntersectionEnvTest, TerminationExamples) {
  EnvConfig cfg;
  EXPECT_EQ(CheckTermination(MakeState(0.5, 5, 0.5, 5, 20, 5), cfg), OutcomeKind::kCollision);
  EXPECT_EQ(CheckTermination(MakeState(-16, 5, 20, 5, 20, 5), cfg), OutcomeKind::kPass);
  EXPECT_EQ(CheckTermination(MakeState(5, 5, 20, 5, 20, 5, 200), cfg), OutcomeKind::kTimeLimit);
  EXPECT_EQ(CheckTermination(MakeState(5, 5, 20, 5, 20, 5, 199), cfg), OutcomeKind::kRunning);
  // Precedence: collision beats time limit, pass beats time limit.
  EXPECT_EQ(CheckTermination(MakeState(0, 5, 1, 5, 20, 5, 200), cfg), OutcomeKind::kCollision);
  EXPECT_EQ(CheckTermination(MakeState(-16, 5, 20, 5, 20, 5, 200), cfg), OutcomeKind::kPass);
}

TEST(IntersectionEnvTest, TerminationMatchesOracleOnGrid) {
  EnvConfig cfg;
  for (int i = -50; i <= 50; i += 3) {
    for (int j = -50; j <= 50; j += 3) {
      for (int k = -50; k <= 50; k += 3) {
        const double dp = i / 10.0, d1 = j / 10.0, d2 = k / 10.0;
        ASSERT_EQ(CheckTermination(MakeState(dp, 1, d1, 1, d2, 1), cfg),
                  testing::OracleTermination(dp, d1, d2, 0, cfg));
      }
    }
  }
}

TEST(IntersectionEnvTest, ResetRangesAndDeterminism) {
  EnvConfig cfg;
  Rng a(7), b(7);
  for (int i = 0; i < 10000; ++i) {
    EnvState s = ResetState(cfg, a);
    ASSERT_EQ(s, ResetState(cfg, b));
    ASSERT_DOUBLE_EQ(s.protagonist.distance, 25.0);
    ASSERT_GE(s.protagonist.speed, 2.0);
    ASSERT_LE(s.protagonist.speed, 8.0);
    for (const VehicleState& v : {s.adversary1, s.adversary2}) {
      ASSERT_GE(v.distance, 20.0);
      ASSERT_LE(v.distance, 30.0);
      ASSERT_GE(v.speed, 2.0);
      ASSERT_LE(v.speed, 8.0);
    }
    ASSERT_EQ(s.step_count, 0);
  }
}

TEST(IntersectionEnvTest, ResetDistributionIsUniform) {
  EnvConfig cfg;
  Rng rng(8);
  const int n = 20000, bins = 10;
  std::vector<int> counts(bins, 0);
  for (int i = 0; i < n; ++i) {
    const double d = ResetState(cfg, rng).adversary1.distance;
    ++counts[std::min(bins - 1, static_cast<int>((d - 20.0) / 1.0))];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - n / bins) * (c - n / bins) / double(n / bins);
  EXPECT_LT(chi2, 27.88);  // 9 dof, 0.999 quantile
}

TEST(IntersectionEnvTest, ObserveScalingAndRoundTrip) {
  EnvConfig cfg;
  Observation o = Observe(MakeState(25, 5, 20, 4, 30, 8), cfg);
  EXPECT_DOUBLE_EQ(o[0], 1.0);
  EXPECT_DOUBLE_EQ(o[1], 0.5);
  EXPECT_DOUBLE_EQ(o[2], 0.8);
  Rng rng(9);
  std::uniform_real_distribution<double> d(-20, 30), v(0, 12);
  for (int i = 0; i < 1000; ++i) {
    EnvState s = MakeState(d(rng), v(rng), d(rng), v(rng), d(rng), v(rng), 17);
    EnvState back = Unobserve(Observe(s, cfg), 17, cfg);
    ASSERT_NEAR(back.protagonist.distance, s.protagonist.distance, 1e-12);
    ASSERT_NEAR(back.adversary2.speed, s.adversary2.speed, 1e-12);
  }
}

TEST(IntersectionEnvTest, ScriptedAdversaryRanges) {
  EnvConfig cfg;
  Rng rng(10);
  for (int i = 0; i < 100000; ++i) {
    Eigen::Vector2d agg = ScriptedAdversary(AdversaryMode::kAggressive, cfg, rng);
    Eigen::Vector2d con = ScriptedAdversary(AdversaryMode::kConservative, cfg, rng);
    Eigen::Vector2d ran = ScriptedAdversary(AdversaryMode::kRandom, cfg, rng);
    Eigen::Vector2d tr = ScriptedAdversary(AdversaryMode::kTrainRandom, cfg, rng);
    ASSERT_TRUE(agg.minCoeff() >= 1.0 && agg.maxCoeff() <= 2.0);
    ASSERT_TRUE(con.minCoeff() >= -2.0 && con.maxCoeff() <= -1.0);
    ASSERT_TRUE(ran[0] >= -2.0 && ran[0] <= -1.0 && ran[1] >= 1.0 && ran[1] <= 2.0);
    ASSERT_TRUE(tr.cwiseAbs().maxCoeff() <= 2.0);
  }
  EXPECT_EQ(ParseAdversaryMode("train-random"), AdversaryMode::kTrainRandom);
  EXPECT_EQ(ParseAdversaryMode(AdversaryModeName(AdversaryMode::kRandom)), AdversaryMode::kRandom);
  EXPECT_THROW(ParseAdversaryMode("polite"), std::invalid_argument);
}

TEST(IntersectionEnvTest, FullThrottlePassMatchesClosedForm) {
  EnvConfig cfg;
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    EnvState s = ResetState(cfg, rng);
    // Parked adversaries never reach their conflict points.
    s.adversary1 = {30.0, 0.0};
    s.adversary2 = {30.0, 0.0};
    // Closed form: v_k = min(v0 + 3 k dt, 12), d_k = 25 - dt * sum_{j<=k} v_j.
    int expect_steps = 0;
    double dist = 25.0;
    for (int k = 1; dist >= cfg.pass_threshold; ++k) {
      dist -= cfg.dt * std::min(s.protagonist.speed + 3.0 * k * cfg.dt, 12.0);
      expect_steps = k;
    }
    IntersectionEnv env(cfg);
    env.SetState(s);
    double ret = 0.0;
    int steps = 0;
    StepOutcome out;
    do {
      out = env.Step(3.0, Eigen::Vector2d::Zero());
      ret += out.reward;
      ++steps;
    } while (!out.done);
    EXPECT_EQ(out.kind, OutcomeKind::kPass);
    EXPECT_EQ(steps, expect_steps);
    EXPECT_DOUBLE_EQ(ret, 110.0 - (steps - 1));
  }
}

TEST(IntersectionEnvTest, StepMatchesOracleKinematics) {
  EnvConfig cfg;
  Rng rng(12);
  std::uniform_real_distribution<double> a(-4, 4);
  EnvState s = ResetState(cfg, rng);
  for (int i = 0; i < 150; ++i) {
    const double pa = a(rng), u1 = a(rng), u2 = a(rng);
    StepResult r = StepState(s, pa, Eigen::Vector2d(u1, u2), cfg);
    EnvState expect = testing::OracleStep(s, pa, u1, u2, cfg);
    ASSERT_EQ(r.state, expect);
    s = r.state;
  }
}

TEST(IntersectionEnvTest, NoCollisionOnceAdversariesHaveLeft) {
  EnvConfig cfg;
  const double grid[] = {-3.0, -1.5, 0.0, 1.5, 3.0};
  for (double dp : {4.0, 1.0, 0.0, -1.0}) {
    for (double vp : {0.0, 6.0}) {
      IntersectionEnv env(cfg);
      for (double a : grid) {
        for (double u1 : {-2.0, 0.0, 2.0}) {
          for (double u2 : {-2.0, 0.0, 2.0}) {
            env.SetState(MakeState(dp, vp, -2.01, 0.5, -2.5, 3.0));
            for (int t = 0; t < 20; ++t) {
              StepOutcome out = env.Step(a, Eigen::Vector2d(u1, u2));
              ASSERT_NE(out.kind, OutcomeKind::kCollision);
              if (out.done) break;
            }
          }
        }
      }
    }
  }
}

TEST(IntersectionEnvTest, TrajectoryCsvHasHeaderAndRows) {
  const auto path = std::filesystem::temp_directory_path() / "mdsac_traj_test.csv";
  std::vector<TrajectoryRow> rows(2);
  rows[1].outcome = OutcomeKind::kPass;
  rows[1].reward = 110.0;
  WriteTrajectoryCsv(path, rows);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kTrajectoryCsvHeader);
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace minimax_dsac
