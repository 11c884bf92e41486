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

#include "emotext/metrics.h"

#include <cmath>
#include <map>
#include <vector>

#include "emotext/random.h"
#include "gtest/gtest.h"

namespace emotext {
namespace {

constexpr Emotion kJoy = Emotion::kJoy;
constexpr Emotion kFear = Emotion::kFear;

std::array<LabelMetrics, kNumEmotions> Precisions(const std::array<double, 5>& p) {
  std::array<LabelMetrics, kNumEmotions> out{};
  for (std::size_t l = 0; l < kNumEmotions; ++l) out[l].precision = p[l];
  return out;
}

TEST(ConfusionMatrixTest, Placement) {
  const std::vector<Emotion> truth = {kJoy, kFear};
  const std::vector<Emotion> predicted = {kFear, kFear};
  const ConfusionMatrix cm = confusion_matrix(truth, predicted);
  EXPECT_EQ(cm.at(kJoy, kFear), 1u);
  EXPECT_EQ(cm.at(kFear, kFear), 1u);
  EXPECT_EQ(cm.at(kJoy, kJoy), 0u);
  EXPECT_EQ(cm.total(), 2u);
  EXPECT_EQ(cm.trace(), 1u);
}

TEST(ConfusionMatrixTest, PerfectPrediction) {
  std::vector<Emotion> labels;
  for (int i = 0; i < 23; ++i) labels.push_back(label_at(i % 5));
  const ConfusionMatrix cm = confusion_matrix(labels, labels);
  EXPECT_EQ(cm.trace(), 23u);
  EXPECT_EQ(accuracy(cm), 1.0);
  for (const Emotion e : kAllEmotions) {
    EXPECT_EQ(label_metrics(cm, e), (LabelMetrics{1.0, 1.0, 1.0}));
  }
}

TEST(ConfusionMatrixTest, Errors) {
  const std::vector<Emotion> one = {kJoy};
  const std::vector<Emotion> two = {kJoy, kJoy};
  EXPECT_THROW(confusion_matrix(one, two), Error);
  EXPECT_THROW(confusion_matrix(std::vector<Emotion>{}, std::vector<Emotion>{}), Error);
  EXPECT_THROW(accuracy(ConfusionMatrix{}), Error);
}

TEST(ConfusionMatrixTest, Accumulate) {
  ConfusionMatrix a;
  a.add(kJoy, kJoy);
  ConfusionMatrix b;
  b.add(kJoy, kJoy);
  b.add(kFear, kJoy);
  a += b;
  EXPECT_EQ(a.at(kJoy, kJoy), 2u);
  EXPECT_EQ(a.at(kFear, kJoy), 1u);
  EXPECT_EQ(a.total(), 3u);
}

TEST(LabelMetricsTest, HandComputed) {
  // Joy: TP = 3, FP = 1, FN = 3.
  ConfusionMatrix cm;
  for (int i = 0; i < 3; ++i) cm.add(kJoy, kJoy);
  cm.add(kFear, kJoy);
  for (int i = 0; i < 3; ++i) cm.add(kJoy, Emotion::kGuilt);
  const LabelMetrics m = label_metrics(cm, kJoy);
  EXPECT_DOUBLE_EQ(m.precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 0.5);
  EXPECT_DOUBLE_EQ(m.f1, 0.6);
  // Sadness is never true and never predicted.
  EXPECT_EQ(label_metrics(cm, Emotion::kSadness), LabelMetrics{});
}

TEST(LabelMetricsTest, F1Score) {
  EXPECT_EQ(f1_score(0.0, 0.0), 0.0);
  EXPECT_NEAR(f1_score(0.76, 0.77), 0.765, 1e-3);
  EXPECT_DOUBLE_EQ(f1_score(1.0, 0.5), 2.0 / 3.0);
}

TEST(AccuracyTest, Arithmetic) {
  ConfusionMatrix cm;
  cm.counts[0][0] = 647;
  cm.counts[1][0] = 353;
  EXPECT_DOUBLE_EQ(accuracy(cm), 0.647);
}

TEST(MacroAverageTest, Constant) {
  const std::array<LabelMetrics, kNumEmotions> same = {
      LabelMetrics{0.3, 0.4, 0.5}, {0.3, 0.4, 0.5}, {0.3, 0.4, 0.5}, {0.3, 0.4, 0.5},
      {0.3, 0.4, 0.5}};
  const MacroAverage m = macro_average(same);
  EXPECT_NEAR(m.precision, 0.3, 1e-15);
  EXPECT_NEAR(m.recall, 0.4, 1e-15);
  EXPECT_NEAR(m.f1, 0.5, 1e-15);
  EXPECT_THROW(macro_average(std::span<const LabelMetrics>(same.data(), 4)), Error);
}

TEST(MacroAverageTest, PublishedPerLabelColumns) {
  const MacroAverage svm = macro_average(Precisions({0.76, 0.54, 0.75, 0.67, 0.54}));
  EXPECT_NEAR(svm.precision, 0.652, 1e-12);
  EXPECT_NEAR(std::round(svm.precision * 100) / 100, 0.65, 1e-12);

  std::array<LabelMetrics, kNumEmotions> lr{};
  const std::array<double, 5> f1 = {0.76, 0.64, 0.73, 0.62, 0.57};
  for (std::size_t l = 0; l < kNumEmotions; ++l) lr[l].f1 = f1[l];
  EXPECT_NEAR(macro_average(lr).f1, 0.664, 1e-12);
}

// Every derived value recomputed from a tally of (truth, predicted) pairs.
TEST(MetricsOracleTest, RandomSequences) {
  Rng rng(2718);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.uniform_below(300);
    std::vector<Emotion> truth;
    std::vector<Emotion> predicted;
    for (std::size_t i = 0; i < n; ++i) {
      truth.push_back(label_at(rng.uniform_below(5)));
      predicted.push_back(rng.uniform_below(3) == 0 ? truth.back()
                                                    : label_at(rng.uniform_below(5)));
    }
    std::map<std::pair<int, int>, std::uint64_t> tally;
    for (std::size_t i = 0; i < n; ++i) {
      ++tally[{static_cast<int>(truth[i]), static_cast<int>(predicted[i])}];
    }
    const ConfusionMatrix cm = confusion_matrix(truth, predicted);
    for (int t = 0; t < 5; ++t) {
      for (int p = 0; p < 5; ++p) {
        const std::uint64_t expected = tally[{t, p}];
        ASSERT_EQ(cm.counts[t][p], expected);
      }
    }

    double sum_p = 0.0;
    double sum_r = 0.0;
    double sum_f = 0.0;
    std::size_t correct = 0;
    std::array<LabelMetrics, kNumEmotions> per_label{};
    for (int l = 0; l < 5; ++l) {
      std::size_t tp = 0;
      std::size_t fp = 0;
      std::size_t fn = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool t = static_cast<int>(truth[i]) == l;
        const bool p = static_cast<int>(predicted[i]) == l;
        tp += t && p;
        fp += !t && p;
        fn += t && !p;
      }
      correct += tp;
      const double prec = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
      const double rec = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
      const double f = prec + rec == 0 ? 0.0 : 2 * prec * rec / (prec + rec);
      per_label[l] = label_metrics(cm, label_at(l));
      ASSERT_NEAR(per_label[l].precision, prec, 1e-12);
      ASSERT_NEAR(per_label[l].recall, rec, 1e-12);
      ASSERT_NEAR(per_label[l].f1, f, 1e-12);
      sum_p += prec;
      sum_r += rec;
      sum_f += f;
    }
    ASSERT_NEAR(accuracy(cm), static_cast<double>(correct) / n, 1e-12);
    const MacroAverage macro = macro_average(per_label);
    ASSERT_NEAR(macro.precision, sum_p / 5, 1e-12);
    ASSERT_NEAR(macro.recall, sum_r / 5, 1e-12);
    ASSERT_NEAR(macro.f1, sum_f / 5, 1e-12);
  }
}

TEST(EvaluateTest, FillsReport) {
  ConfusionMatrix cm;
  cm.add(kJoy, kJoy);
  cm.add(kFear, kJoy);
  const EvaluationReport r = evaluate(ClassifierKind::kKnn, cm, 12.5, 3.0);
  EXPECT_EQ(r.classifier, ClassifierKind::kKnn);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
  EXPECT_DOUBLE_EQ(r.per_label[0].precision, 0.5);
  EXPECT_DOUBLE_EQ(r.macro_precision, 0.1);
  EXPECT_DOUBLE_EQ(r.macro_recall, 0.2);
  EXPECT_EQ(r.cpu_time_train_ms, 12.5);
  EXPECT_EQ(r.cpu_time_predict_ms, 3.0);
}

}  // namespace
}  // namespace emotext
