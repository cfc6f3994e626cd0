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

// Command-line front end: train, eval, report, compare.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minimax_dsac/checkpoint.h"
#include "minimax_dsac/config.h"
#include "minimax_dsac/csv.h"
#include "minimax_dsac/evaluation.h"
#include "minimax_dsac/reports.h"
#include "minimax_dsac/stats.h"
#include "minimax_dsac/trainer.h"

namespace fs = std::filesystem;
using namespace minimax_dsac;

namespace {

void PrintSummary(const EvalSummary& s) {
  std::cout << AdversaryModeName(s.mode) << ": episodes " << s.returns.size() << ", mean return "
            << s.mean << " (std " << s.std << "), pass rate " << s.pass_rate
            << ", collision rate " << s.collision_rate << ", mean crossing time "
            << s.mean_crossing_time << " s\n";
}

int RunTrain(const std::string& config_path, const std::optional<std::string>& algo,
             const std::optional<std::uint64_t>& seed, const std::optional<long>& total_steps,
             const std::string& out) {
  TrainConfig config = config_path.empty() ? TrainConfig{} : LoadConfig(config_path);
  if (algo) config.algorithm = ParseAlgorithm(*algo);
  if (seed) config.seed = *seed;
  if (total_steps) config.total_steps = *total_steps;
  config.Validate();

  TrainHooks hooks;
  hooks.on_log = [](const TrainingLogRow& r) {
    std::cout << "step " << r.env_steps << "  updates " << r.iteration << "  avg_return "
              << r.avg_return << "  critic " << r.critic_loss << "  protagonist "
              << r.protagonist_loss << "  adversary " << r.adversary_loss << "  alpha "
              << r.alpha << std::endl;
  };
  const RunArtifacts artifacts = Train(config, hooks);
  EmitReports(artifacts, out);
  for (const EvalSummary& s : artifacts.evaluations) PrintSummary(s);
  std::cout << "wrote " << out << "\n";
  return 0;
}

int RunEval(const std::string& checkpoint_path, const std::string& mode_name, int episodes,
            std::uint64_t seed, const std::string& out) {
  const Checkpoint ckpt = LoadCheckpoint(checkpoint_path);
  const TrainConfig config = ParseConfig(ckpt.config_text);
  const NetParams* protagonist = ckpt.Find("protagonist");
  if (protagonist == nullptr) throw std::runtime_error("checkpoint has no protagonist network");
  const AdversaryMode mode = ParseAdversaryMode(mode_name);
  Rng rng = MakeRng(seed, RngStream::kEval);
  const EvalSummary summary = Evaluate(*protagonist, mode, episodes, config.env, rng);

  fs::create_directories(out);
  WriteEvalCsv(fs::path(out) / ("eval_" + AdversaryModeName(mode) + ".csv"), summary);
  WriteEvalSummaryCsv(fs::path(out) / "eval_summary.csv", {summary});
  fs::create_directories(fs::path(out) / "trajectories");
  for (std::size_t k = 0; k < summary.episodes.size(); ++k) {
    WriteTrajectoryCsv(fs::path(out) / "trajectories" /
                           (AdversaryModeName(mode) + "_episode" + std::to_string(k) + ".csv"),
                       summary.episodes[k].trajectory);
  }
  PrintSummary(summary);
  return 0;
}

int RunCompare(const std::string& a, const std::string& b) {
  const std::vector<double> ra = ReadEvalReturns(a);
  const std::vector<double> rb = ReadEvalReturns(b);
  const WelchResult w = WelchTTest(ra, rb);
  std::cout << "mean_a " << Mean(ra) << "  mean_b " << Mean(rb) << "\n";
  std::cout << "t " << FormatDouble(w.t) << "  p " << FormatDouble(w.p) << "  df "
            << FormatDouble(w.degrees_of_freedom) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  minimax_dsac::TuneAllocatorForTraining();
  CLI::App app{"Minimax distributional soft actor-critic on an unsignalized intersection"};
  app.require_subcommand(1);

  std::string config_path, out;
  std::optional<std::string> algo;
  std::optional<std::uint64_t> seed;
  std::optional<long> total_steps;
  auto* train = app.add_subcommand("train", "train a protagonist (and adversary)");
  train->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  train->add_option("--algo", algo, "dsac or minimax-dsac")
      ->check(CLI::IsMember({"dsac", "minimax-dsac"}));
  train->add_option("--seed", seed, "random seed");
  train->add_option("--total-steps", total_steps, "override total_steps");
  train->add_option("--out", out, "output directory")->required();

  std::string checkpoint, mode;
  int episodes = 20;
  std::uint64_t eval_seed = 0;
  std::string eval_out;
  auto* eval = app.add_subcommand("eval", "evaluate a checkpoint against scripted adversaries");
  eval->add_option("--checkpoint", checkpoint)->required()->check(CLI::ExistingFile);
  eval->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"aggressive", "conservative", "random", "train-random"}));
  eval->add_option("--episodes", episodes)->check(CLI::PositiveNumber);
  eval->add_option("--seed", eval_seed);
  eval->add_option("--out", eval_out)->required();

  std::vector<std::string> runs;
  std::string report_out;
  auto* report = app.add_subcommand("report", "aggregate run directories into plots and tables");
  report->add_option("--runs", runs)->required()->expected(1, -1);
  report->add_option("--out", report_out)->required();

  std::string csv_a, csv_b;
  auto* compare = app.add_subcommand("compare", "Welch t-test between two evaluation CSVs");
  compare->add_option("--a", csv_a)->required()->check(CLI::ExistingFile);
  compare->add_option("--b", csv_b)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) return RunTrain(config_path, algo, seed, total_steps, out);
    if (*eval) return RunEval(checkpoint, mode, episodes, eval_seed, eval_out);
    if (*report) {
      std::vector<fs::path> dirs(runs.begin(), runs.end());
      AggregateRuns(dirs, report_out);
      std::cout << "wrote " << report_out << "\n";
      return 0;
    }
    if (*compare) return RunCompare(csv_a, csv_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
