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

// Python bindings: environment, configuration, training, evaluation and the
// Welch test. Vectors cross the boundary as numpy arrays via pybind11/eigen.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "minimax_dsac/checkpoint.h"
#include "minimax_dsac/config.h"
#include "minimax_dsac/evaluation.h"
#include "minimax_dsac/intersection_env.h"
#include "minimax_dsac/reports.h"
#include "minimax_dsac/stats.h"
#include "minimax_dsac/trainer.h"

namespace py = pybind11;

namespace minimax_dsac {
namespace {

// Owns the generator so Python callers only deal with seeds.
class PyEnv {
 public:
  PyEnv(const EnvConfig& config, std::uint64_t seed) : env_(config), rng_(seed) {}
  Eigen::VectorXd Reset() {
    env_.Reset(rng_);
    return env_.observation();
  }
  py::tuple Step(double accel, const Eigen::Vector2d& adversary_accel) {
    const StepOutcome out = env_.Step(accel, adversary_accel);
    return py::make_tuple(Eigen::VectorXd(env_.observation()), out.reward, out.done,
                          OutcomeName(out.kind));
  }
  Eigen::Vector2d Scripted(const std::string& mode) {
    return ScriptedAdversary(ParseAdversaryMode(mode), env_.config(), rng_);
  }
  const IntersectionEnv& env() const { return env_; }

 private:
  IntersectionEnv env_;
  Rng rng_;
};

py::dict SummaryDict(const EvalSummary& s) {
  py::dict d;
  d["mode"] = AdversaryModeName(s.mode);
  d["returns"] = s.returns;
  d["mean"] = s.mean;
  d["std"] = s.std;
  d["pass_rate"] = s.pass_rate;
  d["collision_rate"] = s.collision_rate;
  d["mean_crossing_time"] = s.mean_crossing_time;
  return d;
}

}  // namespace
}  // namespace minimax_dsac

PYBIND11_MODULE(_core, m) {
  using namespace minimax_dsac;
  m.doc() = "Minimax distributional soft actor-critic for an unsignalized intersection";
  TuneAllocatorForTraining();

  py::class_<EnvConfig>(m, "EnvConfig")
      .def(py::init<>())
      .def_readwrite("dt", &EnvConfig::dt)
      .def_readwrite("protagonist_accel_bound", &EnvConfig::protagonist_accel_bound)
      .def_readwrite("adversary_accel_bound", &EnvConfig::adversary_accel_bound)
      .def_readwrite("max_speed", &EnvConfig::max_speed)
      .def_readwrite("collision_half_length", &EnvConfig::collision_half_length)
      .def_readwrite("pass_threshold", &EnvConfig::pass_threshold)
      .def_readwrite("max_episode_steps", &EnvConfig::max_episode_steps);

  py::class_<PyEnv>(m, "IntersectionEnv")
      .def(py::init<const EnvConfig&, std::uint64_t>(), py::arg("config") = EnvConfig{},
           py::arg("seed") = 0)
      .def("reset", &PyEnv::Reset, "Samples an initial state; returns the observation.")
      .def("step", &PyEnv::Step, py::arg("accel"), py::arg("adversary_accel"),
           "Returns (observation, reward, done, outcome).")
      .def("scripted_adversary", &PyEnv::Scripted, py::arg("mode"))
      .def_property_readonly("step_count", [](const PyEnv& e) { return e.env().state().step_count; })
      .def_property_readonly("protagonist", [](const PyEnv& e) {
        return py::make_tuple(e.env().state().protagonist.distance, e.env().state().protagonist.speed);
      });

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_static("parse", &ParseConfig, py::arg("text"))
      .def_static("load", &LoadConfig, py::arg("path"))
      .def("set", [](TrainConfig& c, const std::string& k, const std::string& v) { SetConfigValue(c, k, v); })
      .def("validate", &TrainConfig::Validate)
      .def("serialize", &SerializeConfig)
      .def_property("algorithm", [](const TrainConfig& c) { return AlgorithmName(c.algorithm); },
                    [](TrainConfig& c, const std::string& v) { c.algorithm = ParseAlgorithm(v); })
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("total_steps", &TrainConfig::total_steps)
      .def_readwrite("hidden_widths", &TrainConfig::hidden_widths)
      .def_readwrite("eval_episodes", &TrainConfig::eval_episodes)
      .def_readwrite("env", &TrainConfig::env);

  m.def("config_keys", &ConfigKeys);

  m.def(
      "train",
      [](const TrainConfig& config, const std::string& out_dir,
         const std::function<void(py::dict)>& on_log) {
        TrainHooks hooks;
        if (on_log) {
          hooks.on_log = [&](const TrainingLogRow& r) {
            py::gil_scoped_acquire gil;
            py::dict d;
            d["iteration"] = r.iteration;
            d["env_steps"] = r.env_steps;
            d["avg_return"] = r.avg_return;
            d["critic_loss"] = r.critic_loss;
            d["alpha"] = r.alpha;
            on_log(d);
          };
        }
        RunArtifacts art;
        {
          py::gil_scoped_release release;
          art = Train(config, hooks);
          if (!out_dir.empty()) EmitReports(art, out_dir);
        }
        py::list evals;
        for (const EvalSummary& s : art.evaluations) evals.append(SummaryDict(s));
        py::dict result;
        result["episode_returns"] = art.episode_returns;
        result["evaluations"] = evals;
        result["checkpoints"] = art.checkpoints.size();
        return result;
      },
      py::arg("config"), py::arg("out_dir") = "", py::arg("on_log") = nullptr,
      "Runs training; optionally writes the report directory.");

  m.def(
      "evaluate_checkpoint",
      [](const std::string& path, const std::string& mode, int episodes, std::uint64_t seed) {
        const Checkpoint ck = LoadCheckpoint(path);
        const TrainConfig cfg = ParseConfig(ck.config_text);
        const NetParams* pi = ck.Find("protagonist");
        if (!pi) throw std::runtime_error("checkpoint has no protagonist network");
        Rng rng = MakeRng(seed, RngStream::kEval);
        return SummaryDict(Evaluate(*pi, ParseAdversaryMode(mode), episodes, cfg.env, rng));
      },
      py::arg("checkpoint"), py::arg("mode"), py::arg("episodes") = 20, py::arg("seed") = 0);

  m.def(
      "welch_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const WelchResult r = WelchTTest(a, b);
        return py::make_tuple(r.t, r.p, r.degrees_of_freedom);
      },
      py::arg("a"), py::arg("b"), "Two-sided Welch test; returns (t, p, df).");
}
