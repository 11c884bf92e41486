/*
 * Copyright 2026 The emotext Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "emotext/linear.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "emotext/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace emotext {
namespace {

SparseVector Dense(std::vector<double> values) { return SparseVector::from_dense(values); }

TEST(SigmoidTest, StableAtExtremes) {
  EXPECT_EQ(sigmoid(0.0), 0.5);
  EXPECT_NEAR(sigmoid(2.0), 1.0 / (1.0 + std::exp(-2.0)), 1e-15);
  EXPECT_NEAR(sigmoid(-2.0), 1.0 / (1.0 + std::exp(2.0)), 1e-15);
  EXPECT_EQ(sigmoid(1000.0), 1.0);
  EXPECT_EQ(sigmoid(-1000.0), 0.0);
  EXPECT_GT(sigmoid(-700.0), 0.0);
}

TEST(LrUpdateTest, FirstStepFromZero) {
  double bias = 0.0;
  std::vector<double> w = {0.0};
  lr_update(bias, w, Dense({1.0}), 1.0, 0.1);
  EXPECT_NEAR(bias, 0.0125, 1e-12);
  EXPECT_NEAR(w[0], 0.0125, 1e-12);
}

TEST(LrUpdateTest, ZeroErrorIsFixedPoint) {
  double bias = 0.0;
  std::vector<double> w = {0.0, 0.0};
  lr_update(bias, w, Dense({2.0, 3.0}), 0.5, 0.7);  // p = 0.5 = target
  EXPECT_EQ(bias, 0.0);
  EXPECT_EQ(w, (std::vector<double>{0.0, 0.0}));
}

TEST(LrUpdateTest, ZeroInputMovesOnlyBias) {
  double bias = 0.3;
  std::vector<double> w = {0.2, -0.4};
  lr_update(bias, w, SparseVector{}, 1.0, 0.5);
  EXPECT_EQ(w, (std::vector<double>{0.2, -0.4}));
  const double p = 1.0 / (1.0 + std::exp(-0.3));
  EXPECT_NEAR(bias, 0.3 + 0.5 * (1.0 - p) * p * (1.0 - p), 1e-15);
}

TEST(LrUpdateTest, MatchesHandFormula) {
  Rng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t width = 1 + rng.uniform_below(6);
    std::vector<double> w(width);
    std::vector<double> x(width);
    for (auto& v : w) v = rng.uniform(-1, 1);
    for (auto& v : x) v = rng.uniform_below(2) ? rng.uniform(0, 2) : 0.0;
    double bias = rng.uniform(-1, 1);
    const double target = static_cast<double>(rng.uniform_below(2));
    const double rate = rng.uniform(0.01, 1.0);

    double z = bias;
    for (std::size_t j = 0; j < width; ++j) z += w[j] * x[j];
    const double p = 1.0 / (1.0 + std::exp(-z));
    const double delta = rate * (target - p) * p * (1.0 - p);
    std::vector<double> expected = w;
    for (std::size_t j = 0; j < width; ++j) expected[j] += delta * x[j];

    const double expected_bias = bias + delta;
    lr_update(bias, w, Dense(x), target, rate);
    ASSERT_NEAR(bias, expected_bias, 1e-12);
    for (std::size_t j = 0; j < width; ++j) ASSERT_NEAR(w[j], expected[j], 1e-12);
  }
}

TEST(HingeStepTest, SatisfiedMarginWithoutDecayIsNoOp) {
  double bias = 0.5;
  std::vector<double> w = {1.0, 2.0};
  hinge_step(bias, w, Dense({1.0, 0.0}), +1, 0.1, 0.0);
  EXPECT_EQ(bias, 0.5);
  EXPECT_EQ(w, (std::vector<double>{1.0, 2.0}));
}

TEST(HingeStepTest, SatisfiedMarginOnlyShrinks) {
  double bias = 0.0;
  std::vector<double> w = {4.0};
  hinge_step(bias, w, Dense({1.0}), +1, 0.1, 0.5);
  EXPECT_DOUBLE_EQ(w[0], 4.0 * 0.95);
  EXPECT_EQ(bias, 0.0);
}

TEST(HingeStepTest, ViolationFromZero) {
  double bias = 0.0;
  std::vector<double> w = {0.0, 0.0, 0.0};
  hinge_step(bias, w, Dense({0.5, 0.0, 2.0}), +1, 0.2, 0.01);
  EXPECT_DOUBLE_EQ(bias, 0.2);
  EXPECT_DOUBLE_EQ(w[0], 0.1);
  EXPECT_EQ(w[1], 0.0);
  EXPECT_DOUBLE_EQ(w[2], 0.4);
}

TEST(HingeStepTest, ConvergesOnSeparablePair) {
  // x = +1 is labeled +1 and x = -1 is labeled -1. Feature values must be
  // non-negative elsewhere in the library, but the step itself is generic.
  double bias = 0.0;
  std::vector<double> w = {0.0};
  const SparseVector pos = Dense({1.0});
  const SparseVector neg = Dense({-1.0});
  int steps = 0;
  for (; steps < 100; ++steps) {
    if (bias + w[0] > 0 && bias - w[0] < 0) break;
    if (steps % 2 == 0) {
      hinge_step(bias, w, pos, +1, 0.1, 1e-3);
    } else {
      hinge_step(bias, w, neg, -1, 0.1, 1e-3);
    }
  }
  EXPECT_LT(steps, 100);
  EXPECT_GT(w[0], 0.0);
}

TEST(SoftmaxScoresTest, Examples) {
  const std::vector<double> zero(4, 0.0);
  for (const double p : softmax_scores(zero)) EXPECT_NEAR(p, 0.2, 1e-15);

  const std::vector<double> big = {0.0, 50.0, 0.0, 0.0};
  const auto p = softmax_scores(big);
  EXPECT_NEAR(p[1], 1.0, 1e-9);
  EXPECT_NEAR(p[4], 0.0, 1e-9);

  const std::vector<double> ln3 = {std::log(3.0)};
  const auto two = softmax_scores(ln3);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[0], 0.75, 1e-15);
  EXPECT_NEAR(two[1], 0.25, 1e-15);
}

TEST(SoftmaxScoresTest, HugeActivationsStayFinite) {
  const std::vector<double> z = {1000.0, 999.0, -1000.0, 0.0};
  const auto p = softmax_scores(z);
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
  EXPECT_NEAR(p[0], 1.0 / (1.0 + std::exp(-1.0)), 1e-12);
}

TEST(LinearModelTest, ZeroWeightsPredictJoy) {
  LinearModel::Params params;
  params.width = 3;
  params.weights.assign(15, 0.0);
  for (const auto output : {LinearModel::Output::kRaw, LinearModel::Output::kNormalizedSigmoid}) {
    params.output = output;
    const LinearModel model(params);
    const PredictOutcome out = model.predict(Dense({1.0, 2.0, 3.0}));
    EXPECT_EQ(out.label, Emotion::kJoy);
    for (const double s : out.scores) EXPECT_EQ(s, out.scores[0]);
  }
  SoftmaxRegressionModel::Params soft;
  soft.width = 3;
  soft.weights.assign(12, 0.0);
  const SoftmaxRegressionModel model(soft);
  EXPECT_EQ(model.predict(Dense({1.0, 0.0, 3.0})).label, Emotion::kJoy);
  for (const double s : model.probabilities(Dense({1.0}))) EXPECT_NEAR(s, 0.2, 1e-15);
}

TEST(LinearModelTest, WrongShapeThrows) {
  LinearModel::Params params;
  params.width = 3;
  params.weights.assign(14, 0.0);
  EXPECT_THROW(LinearModel{params}, Error);
  SoftmaxRegressionModel::Params soft;
  soft.width = 2;
  soft.weights.assign(10, 0.0);
  EXPECT_THROW(SoftmaxRegressionModel{soft}, Error);
}

TEST(LinearModelTest, FamiliesSeparateTrainingData) {
  const auto data = testing::SeparableDataset(20, 3);
  const LogisticConfig multinomial{0.5, 100, LogisticMode::kMultinomial};
  const SgdConfig log_loss{SgdLoss::kLog, 0.1, 0.01, 100};
  EXPECT_EQ(testing::TrainingAccuracy(LinearModel::fit_logistic({}, data.x, data.y, 1), data),
            1.0);
  EXPECT_EQ(testing::TrainingAccuracy(LinearModel::fit_svm({}, data.x, data.y, 1), data), 1.0);
  EXPECT_EQ(testing::TrainingAccuracy(LinearModel::fit_sgd({}, data.x, data.y, 1), data), 1.0);
  EXPECT_EQ(testing::TrainingAccuracy(LinearModel::fit_sgd(log_loss, data.x, data.y, 1), data),
            1.0);
  EXPECT_EQ(testing::TrainingAccuracy(
                SoftmaxRegressionModel::fit(multinomial, data.x, data.y, 1), data),
            1.0);
}

TEST(LinearModelTest, LogisticScoresAreDistribution) {
  const auto data = testing::SeparableDataset(10, 8);
  const auto model = LinearModel::fit_logistic({0.1, 20}, data.x, data.y, 2);
  for (const auto& out : model.predict_all(data.x)) {
    EXPECT_NEAR(std::accumulate(out.scores.begin(), out.scores.end(), 0.0), 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace emotext
