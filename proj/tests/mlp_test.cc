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

#include "minimax_dsac/mlp.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "minimax_dsac/activation.h"
#include "test_support.h"

namespace minimax_dsac {
namespace {

using testing::CentralDifference;
using testing::CompareGradients;
using testing::OracleForward;
using testing::RandomParams;

Architecture SmallArch(Activation act) { return Architecture{5, {7, 4}, 3, act}; }

TEST(ArchitectureTest, ParameterCount) {
  const Architecture arch{9, {256, 256}, 2, Activation::kGelu};
  EXPECT_EQ(arch.ParameterCount(), 9u * 256 + 256 + 256u * 256 + 256 + 256u * 2 + 2);
  EXPECT_EQ(arch.num_layers(), 3);
  EXPECT_EQ(arch.layer_input_width(1), 256);
  EXPECT_EQ(arch.layer_output_width(2), 2);
}

TEST(NetParamsTest, LayoutIsWeightsThenBias) {
  const Architecture arch{2, {3}, 1, Activation::kTanh};
  Eigen::VectorXd flat = Eigen::VectorXd::LinSpaced(arch.ParameterCount(), 0, arch.ParameterCount() - 1);
  NetParams p(arch, flat);
  EXPECT_EQ(p.weight_offset(0), 0u);
  EXPECT_EQ(p.bias_offset(0), 6u);
  EXPECT_EQ(p.weight_offset(1), 9u);
  EXPECT_EQ(p.bias_offset(1), 12u);
  EXPECT_DOUBLE_EQ(p.weights(0)(1, 0), 2.0);  // row-major
  EXPECT_DOUBLE_EQ(p.bias(1)[0], 12.0);
}

TEST(NetParamsTest, RandomInitWithinFanInBound) {
  Rng rng(3);
  const Architecture arch{16, {32}, 4, Activation::kGelu};
  NetParams p = NetParams::RandomInit(arch, rng);
  EXPECT_LE(p.weights(0).cwiseAbs().maxCoeff(), 1.0 / 4.0);
  EXPECT_LE(p.weights(1).cwiseAbs().maxCoeff(), 1.0 / std::sqrt(32.0));
  EXPECT_GT(p.values().cwiseAbs().maxCoeff(), 0.0);
}

TEST(ActivationTest, GeluMatchesReference) {
  for (double x = -6.0; x <= 6.0; x += 0.37) {
    EXPECT_NEAR(Gelu(x), testing::OracleGelu(x), 1e-13) << x;
    const double fd = (Gelu(x + 1e-6) - Gelu(x - 1e-6)) / 2e-6;
    EXPECT_NEAR(GeluDerivative(x), fd, 1e-8) << x;
  }
}

TEST(ActivationTest, ParseRoundTrip) {
  for (Activation a : {Activation::kGelu, Activation::kTanh, Activation::kRelu}) {
    EXPECT_EQ(ParseActivation(ActivationName(a)), a);
  }
  EXPECT_THROW(ParseActivation("swish"), std::invalid_argument);
}

class MlpActivationTest : public ::testing::TestWithParam<Activation> {};

TEST_P(MlpActivationTest, ForwardMatchesOracle) {
  Rng rng(11);
  const Architecture arch = SmallArch(GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    NetParams p = RandomParams(arch, rng, 2.0);
    std::vector<double> x(arch.input_width);
    std::normal_distribution<double> n;
    for (double& v : x) v = n(rng);
    const Eigen::VectorXd out = MlpForward(p, Eigen::Map<Eigen::VectorXd>(x.data(), x.size()));
    const std::vector<double> expect = OracleForward(arch, p.values(), x);
    for (int k = 0; k < arch.output_width; ++k) EXPECT_NEAR(out[k], expect[k], 1e-12);
  }
}

TEST_P(MlpActivationTest, BatchMatchesSingle) {
  Rng rng(12);
  const Architecture arch = SmallArch(GetParam());
  NetParams p = RandomParams(arch, rng);
  Eigen::MatrixXd inputs = Eigen::MatrixXd::Random(arch.input_width, 6);
  Eigen::MatrixXd out = MlpForwardBatch(p, inputs);
  for (int i = 0; i < 6; ++i) {
    const Eigen::VectorXd single = MlpForward(p, inputs.col(i));
    EXPECT_LT((out.col(i) - single).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST_P(MlpActivationTest, BackwardMatchesFiniteDifferences) {
  if (GetParam() == Activation::kRelu) GTEST_SKIP() << "kinks break central differences";
  Rng rng(13);
  const Architecture arch = SmallArch(GetParam());
  for (int trial = 0; trial < 5; ++trial) {
    NetParams p = RandomParams(arch, rng, 1.5);
    const Eigen::VectorXd x = Eigen::VectorXd::Random(arch.input_width);
    const Eigen::VectorXd w = Eigen::VectorXd::Random(arch.output_width);
    const MlpGradients g = MlpBackward(p, x, w);

    auto f_params = [&](const Eigen::VectorXd& theta) {
      return MlpForward(NetParams(arch, theta), x).dot(w);
    };
    auto check = CompareGradients(g.param_grads, CentralDifference(f_params, p.values()));
    EXPECT_TRUE(check.ok) << "worst " << check.worst_error << " at " << check.worst_index;

    auto f_input = [&](const Eigen::VectorXd& in) { return MlpForward(p, in).dot(w); };
    check = CompareGradients(g.input_grads, CentralDifference(f_input, x));
    EXPECT_TRUE(check.ok) << "worst " << check.worst_error;
  }
}

TEST_P(MlpActivationTest, BatchBackwardSumsSingleGradients) {
  Rng rng(14);
  const Architecture arch = SmallArch(GetParam());
  NetParams p = RandomParams(arch, rng);
  Eigen::MatrixXd inputs = Eigen::MatrixXd::Random(arch.input_width, 4);
  Eigen::MatrixXd grads = Eigen::MatrixXd::Random(arch.output_width, 4);
  ForwardCache cache;
  MlpForwardBatch(p, inputs, &cache);
  MlpBatchGradients batch = MlpBackwardBatch(p, cache, grads);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(p.size());
  for (int i = 0; i < 4; ++i) {
    MlpGradients g = MlpBackward(p, inputs.col(i), grads.col(i));
    sum += g.param_grads;
    EXPECT_LT((batch.input_grads.col(i) - g.input_grads).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_LT((batch.param_grads - sum).cwiseAbs().maxCoeff(), 1e-11);

  MlpBatchGradients no_params = MlpBackwardBatch(p, cache, grads, false);
  EXPECT_EQ(no_params.param_grads.size(), 0);
}

INSTANTIATE_TEST_SUITE_P(Activations, MlpActivationTest,
                         ::testing::Values(Activation::kGelu, Activation::kTanh,
                                           Activation::kRelu));

}  // namespace
}  // namespace minimax_dsac
