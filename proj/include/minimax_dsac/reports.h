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

#ifndef MINIMAX_DSAC_REPORTS_H_
#define MINIMAX_DSAC_REPORTS_H_

#include <filesystem>
#include <string_view>
#include <vector>

#include "minimax_dsac/evaluation.h"
#include "minimax_dsac/trainer.h"

namespace minimax_dsac {

inline constexpr std::string_view kTrainingCsvHeader =
    "iteration,env_steps,avg_return,critic_loss,protagonist_loss,adversary_loss,alpha";
inline constexpr std::string_view kEvalCsvHeader = "episode,return,outcome,steps";
inline constexpr std::string_view kEvalSummaryCsvHeader =
    "mode,episodes,mean,std,pass_rate,collision_rate,mean_crossing_time";
inline constexpr std::string_view kBandCsvHeader = "algo,env_steps,mean,lower,upper,runs";
inline constexpr std::string_view kComparisonCsvHeader = "mode,algo_a,algo_b,t,p,df";

void WriteTrainingCsv(const std::filesystem::path& path, const std::vector<TrainingLogRow>& log);
void WriteEvalCsv(const std::filesystem::path& path, const EvalSummary& summary);
void WriteEvalSummaryCsv(const std::filesystem::path& path,
                         const std::vector<EvalSummary>& summaries);

// The "return" column of an evaluation CSV.
std::vector<double> ReadEvalReturns(const std::filesystem::path& path);

// Writes a single run's artifacts into out_dir (created if needed):
//   config.txt, training.csv, eval_summary.csv, eval_<mode>.csv,
//   trajectories/<mode>_episode<k>.csv, checkpoints/step_<n>.ckpt,
//   training_curve.svg, eval_boxplot.svg, trajectory_<mode>.svg.
// Throws std::runtime_error when out_dir is not writable.
void EmitReports(const RunArtifacts& artifacts, const std::filesystem::path& out_dir);

// Aggregates several run directories (as written by EmitReports) into
// confidence bands over seeds, pooled evaluation boxplots and per-mode
// Welch t-tests between algorithms:
//   training_band.csv, training_band.svg, eval_boxplot.svg, comparison.csv.
void AggregateRuns(const std::vector<std::filesystem::path>& run_dirs,
                   const std::filesystem::path& out_dir);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_REPORTS_H_
