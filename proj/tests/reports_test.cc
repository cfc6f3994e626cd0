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

#include "minimax_dsac/reports.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "minimax_dsac/csv.h"
#include "minimax_dsac/stats.h"
#include "minimax_dsac/svg_plot.h"

namespace minimax_dsac {
namespace {

namespace fs = std::filesystem;

class ReportsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mdsac_reports_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

std::string FirstLine(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

int LineCount(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

TEST(StatsTest, ConfidenceBandByHand) {
  // Columns {1,2,6}: mean 3, sample std sqrt(7); {0,0,3}: mean 1, std sqrt(3).
  ConfidenceBand b = ComputeConfidenceBand({{1, 0}, {2, 0}, {6, 3}});
  EXPECT_NEAR(b.mean[0], 3.0, 1e-12);
  EXPECT_NEAR(b.upper[0], 3.0 + 1.96 * std::sqrt(7.0) / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(b.lower[1], 1.0 - 1.96 * std::sqrt(3.0) / std::sqrt(3.0), 1e-12);
  EXPECT_THROW(ComputeConfidenceBand({{1, 2}, {3}}), std::invalid_argument);
}

TEST(StatsTest, BoxStats) {
  BoxStats s = ComputeBoxStats({1, 2, 3, 4, 5, 6, 7, 8, 9, 100});
  EXPECT_DOUBLE_EQ(s.median, 5.5);
  EXPECT_DOUBLE_EQ(s.q1, 3.25);
  EXPECT_DOUBLE_EQ(s.q3, 7.75);
  EXPECT_DOUBLE_EQ(s.whisker_low, 1.0);
  EXPECT_DOUBLE_EQ(s.whisker_high, 9.0);  // 100 is an outlier
}

TEST_F(ReportsTest, CsvRoundTrip) {
  fs::create_directories(dir_);
  {
    CsvWriter w(dir_ / "t.csv", "a,b,c");
    w.Row(1.5, 2L, std::string("x"));
    w.Row(std::nan(""), -3, "y");
  }
  CsvTable t = ReadCsv(dir_ / "t.csv");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.NumericColumn("a")[0], 1.5);
  EXPECT_TRUE(std::isnan(t.NumericColumn("a")[1]));
  EXPECT_EQ(t.rows[1][2], "y");
  EXPECT_THROW(t.column("d"), std::runtime_error);
  EXPECT_EQ(FormatDouble(0.1), "0.1");
}

TEST_F(ReportsTest, EmptyArtifactsGiveHeaderOnlyCsvs) {
  RunArtifacts empty;
  EmitReports(empty, dir_);
  EXPECT_EQ(FirstLine(dir_ / "training.csv"), kTrainingCsvHeader);
  EXPECT_EQ(LineCount(dir_ / "training.csv"), 1);
  EXPECT_EQ(FirstLine(dir_ / "eval_summary.csv"), kEvalSummaryCsvHeader);
  EXPECT_EQ(LineCount(dir_ / "eval_summary.csv"), 1);
}

TEST_F(ReportsTest, EmitAndAggregate) {
  std::vector<fs::path> runs;
  for (Algorithm algo : {Algorithm::kDsac, Algorithm::kMinimaxDsac}) {
    for (std::uint64_t seed : {1u, 2u}) {
      TrainConfig c;
      c.algorithm = algo;
      c.seed = seed;
      c.total_steps = 300;
      c.log_interval = 100;
      c.eval_interval = 150;
      c.eval_episodes = 4;
      c.buffer_capacity = 32;
      c.batch_size = 8;
      c.hidden_widths = {6};
      const fs::path out = dir_ / (AlgorithmName(algo) + "_" + std::to_string(seed));
      EmitReports(Train(c), out);
      runs.push_back(out);
    }
  }
  const fs::path run = runs.front();
  EXPECT_EQ(FirstLine(run / "training.csv"), kTrainingCsvHeader);
  EXPECT_EQ(LineCount(run / "training.csv"), 4);
  EXPECT_EQ(ReadEvalReturns(run / "eval_aggressive.csv").size(), 4u);
  EXPECT_EQ(FirstLine(run / "eval_aggressive.csv"), kEvalCsvHeader);
  EXPECT_TRUE(fs::exists(run / "config.txt"));
  EXPECT_TRUE(fs::exists(run / "training_curve.svg"));
  EXPECT_TRUE(fs::exists(run / "eval_boxplot.svg"));
  EXPECT_TRUE(fs::exists(run / "checkpoints" / "step_300.ckpt"));
  EXPECT_FALSE(fs::is_empty(run / "trajectories"));

  const fs::path agg = dir_ / "aggregate";
  AggregateRuns(runs, agg);
  CsvTable band = ReadCsv(agg / "training_band.csv");
  EXPECT_EQ(band.rows.size(), 6u);  // 3 log rows x 2 algorithms
  for (double n : band.NumericColumn("runs")) EXPECT_EQ(n, 2.0);
  CsvTable cmp = ReadCsv(agg / "comparison.csv");
  EXPECT_EQ(cmp.rows.size(), 4u);  // one per mode
  std::ifstream svg(agg / "eval_boxplot.svg");
  std::stringstream ss;
  ss << svg.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  EXPECT_NE(ss.str().find("</svg>"), std::string::npos);
}

TEST_F(ReportsTest, UnwritablePathThrows) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "file") << "x";
  EXPECT_ANY_THROW(EmitReports(RunArtifacts{}, dir_ / "file" / "sub"));
}

}  // namespace
}  // namespace minimax_dsac
