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
#include <map>
#include <stdexcept>

#include "minimax_dsac/checkpoint.h"
#include "minimax_dsac/config.h"
#include "minimax_dsac/csv.h"
#include "minimax_dsac/stats.h"
#include "minimax_dsac/svg_plot.h"

namespace minimax_dsac {
namespace fs = std::filesystem;

namespace {

void EnsureDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" + dir.string() + "'");
  }
}

std::string ModeFileStem(AdversaryMode mode) { return AdversaryModeName(mode); }

const std::vector<AdversaryMode>& AllModes() {
  static const std::vector<AdversaryMode> modes = {
      AdversaryMode::kAggressive, AdversaryMode::kConservative, AdversaryMode::kRandom,
      AdversaryMode::kTrainRandom};
  return modes;
}

std::string TrajectoryPlot(const EpisodeRecord& e, AdversaryMode mode) {
  LineSeries dp{"d protagonist", {}, {}, {}, {}};
  LineSeries da1{"d adversary 1", {}, {}, {}, {}};
  LineSeries da2{"d adversary 2", {}, {}, {}, {}};
  LineSeries vp{"v protagonist", {}, {}, {}, {}};
  LineSeries va1{"v adversary 1", {}, {}, {}, {}};
  LineSeries va2{"v adversary 2", {}, {}, {}, {}};
  for (const TrajectoryRow& r : e.trajectory) {
    for (LineSeries* s : {&dp, &da1, &da2, &vp, &va1, &va2}) s->x.push_back(r.time);
    dp.y.push_back(r.state.protagonist.distance);
    da1.y.push_back(r.state.adversary1.distance);
    da2.y.push_back(r.state.adversary2.distance);
    vp.y.push_back(r.state.protagonist.speed);
    va1.y.push_back(r.state.adversary1.speed);
    va2.y.push_back(r.state.adversary2.speed);
  }
  return LinePlotSvg("Trajectory (" + AdversaryModeName(mode) + ", " + OutcomeName(e.outcome) +
                         ")",
                     "time [s]", "distance [m] / speed [m/s]", {dp, da1, da2, vp, va1, va2});
}

}  // namespace

void WriteTrainingCsv(const fs::path& path, const std::vector<TrainingLogRow>& log) {
  CsvWriter csv(path, kTrainingCsvHeader);
  for (const TrainingLogRow& r : log) {
    csv.Row(r.iteration, r.env_steps, r.avg_return, r.critic_loss, r.protagonist_loss,
            r.adversary_loss, r.alpha);
  }
}

void WriteEvalCsv(const fs::path& path, const EvalSummary& summary) {
  CsvWriter csv(path, kEvalCsvHeader);
  for (std::size_t i = 0; i < summary.returns.size(); ++i) {
    const bool has_record = i < summary.episodes.size();
    csv.Row(i, summary.returns[i],
            has_record ? OutcomeName(summary.episodes[i].outcome) : std::string("unknown"),
            has_record ? summary.episodes[i].steps : 0);
  }
}

void WriteEvalSummaryCsv(const fs::path& path, const std::vector<EvalSummary>& summaries) {
  CsvWriter csv(path, kEvalSummaryCsvHeader);
  for (const EvalSummary& s : summaries) {
    csv.Row(AdversaryModeName(s.mode), s.returns.size(), s.mean, s.std, s.pass_rate,
            s.collision_rate, s.mean_crossing_time);
  }
}

std::vector<double> ReadEvalReturns(const fs::path& path) {
  return ReadCsv(path).NumericColumn("return");
}

void EmitReports(const RunArtifacts& artifacts, const fs::path& out_dir) {
  EnsureDirectory(out_dir);
  WriteTextFile(out_dir / "config.txt", SerializeConfig(artifacts.config));
  WriteTrainingCsv(out_dir / "training.csv", artifacts.log);
  WriteEvalSummaryCsv(out_dir / "eval_summary.csv", artifacts.evaluations);

  if (!artifacts.checkpoints.empty()) {
    EnsureDirectory(out_dir / "checkpoints");
    for (const Checkpoint& c : artifacts.checkpoints) {
      SaveCheckpoint(out_dir / "checkpoints" / ("step_" + std::to_string(c.env_steps) + ".ckpt"),
                     c);
    }
    SaveCheckpoint(out_dir / "final.ckpt", artifacts.checkpoints.back());
  }

  if (!artifacts.log.empty()) {
    LineSeries curve{AlgorithmName(artifacts.config.algorithm), {}, {}, {}, {}};
    for (const TrainingLogRow& r : artifacts.log) {
      curve.x.push_back(static_cast<double>(r.env_steps));
      curve.y.push_back(r.avg_return);
    }
    WriteTextFile(out_dir / "training_curve.svg",
                  LinePlotSvg("Average return during training", "environment steps",
                              "average return", {curve}));
  }

  std::vector<BoxGroup> boxes;
  for (const EvalSummary& s : artifacts.evaluations) {
    WriteEvalCsv(out_dir / ("eval_" + ModeFileStem(s.mode) + ".csv"), s);
    boxes.push_back({AdversaryModeName(s.mode), s.returns});
    if (!s.episodes.empty()) {
      EnsureDirectory(out_dir / "trajectories");
      for (std::size_t k = 0; k < s.episodes.size(); ++k) {
        WriteTrajectoryCsv(out_dir / "trajectories" /
                               (ModeFileStem(s.mode) + "_episode" + std::to_string(k) + ".csv"),
                           s.episodes[k].trajectory);
      }
      WriteTextFile(out_dir / ("trajectory_" + ModeFileStem(s.mode) + ".svg"),
                    TrajectoryPlot(s.episodes.front(), s.mode));
    }
  }
  if (!boxes.empty()) {
    WriteTextFile(out_dir / "eval_boxplot.svg",
                  BoxPlotSvg("Evaluation returns", "episode return", boxes));
  }
}

void AggregateRuns(const std::vector<fs::path>& run_dirs, const fs::path& out_dir) {
  if (run_dirs.empty()) throw std::invalid_argument("report needs at least one run directory");
  EnsureDirectory(out_dir);

  // algo -> curves / pooled returns per mode
  std::map<std::string, std::vector<std::vector<double>>> curves;
  std::map<std::string, std::vector<double>> steps_axis;
  std::map<std::string, std::map<std::string, std::vector<double>>> pooled;
  for (const fs::path& dir : run_dirs) {
    const TrainConfig cfg = LoadConfig(dir / "config.txt");
    const std::string algo = AlgorithmName(cfg.algorithm);
    const CsvTable training = ReadCsv(dir / "training.csv");
    curves[algo].push_back(training.NumericColumn("avg_return"));
    const std::vector<double> steps = training.NumericColumn("env_steps");
    if (steps_axis[algo].empty() || steps.size() < steps_axis[algo].size()) {
      steps_axis[algo] = steps;
    }
    for (AdversaryMode mode : AllModes()) {
      const fs::path eval = dir / ("eval_" + ModeFileStem(mode) + ".csv");
      if (!fs::exists(eval)) continue;
      const std::vector<double> r = ReadEvalReturns(eval);
      auto& bucket = pooled[algo][AdversaryModeName(mode)];
      bucket.insert(bucket.end(), r.begin(), r.end());
    }
  }

  CsvWriter band_csv(out_dir / "training_band.csv", kBandCsvHeader);
  std::vector<LineSeries> band_series;
  for (auto& [algo, runs] : curves) {
    const std::size_t len = steps_axis[algo].size();
    for (auto& c : runs) c.resize(len);
    const ConfidenceBand band = ComputeConfidenceBand(runs);
    LineSeries s{algo + " (" + std::to_string(runs.size()) + " runs)", {}, {}, {}, {}};
    for (std::size_t i = 0; i < len; ++i) {
      band_csv.Row(algo, steps_axis[algo][i], band.mean[i], band.lower[i], band.upper[i],
                   runs.size());
      s.x.push_back(steps_axis[algo][i]);
      s.y.push_back(band.mean[i]);
      s.lower.push_back(band.lower[i]);
      s.upper.push_back(band.upper[i]);
    }
    band_series.push_back(std::move(s));
  }
  WriteTextFile(out_dir / "training_band.svg",
                LinePlotSvg("Average return during training (95% band)", "environment steps",
                            "average return", band_series));

  std::vector<BoxGroup> boxes;
  CsvWriter comparison(out_dir / "comparison.csv", kComparisonCsvHeader);
  for (AdversaryMode mode : AllModes()) {
    const std::string m = AdversaryModeName(mode);
    std::vector<std::pair<std::string, const std::vector<double>*>> present;
    for (auto& [algo, per_mode] : pooled) {
      auto it = per_mode.find(m);
      if (it == per_mode.end()) continue;
      boxes.push_back({algo + " / " + m, it->second});
      present.emplace_back(algo, &it->second);
    }
    for (std::size_t i = 0; i < present.size(); ++i) {
      for (std::size_t j = i + 1; j < present.size(); ++j) {
        try {
          const WelchResult w = WelchTTest(*present[i].second, *present[j].second);
          comparison.Row(m, present[i].first, present[j].first, w.t, w.p, w.degrees_of_freedom);
        } catch (const std::invalid_argument&) {
          comparison.Row(m, present[i].first, present[j].first, std::nan(""), std::nan(""),
                         std::nan(""));
        }
      }
    }
  }
  WriteTextFile(out_dir / "eval_boxplot.svg",
                BoxPlotSvg("Evaluation returns by mode", "episode return", boxes));
}

}  // namespace minimax_dsac
