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

#include <string>

namespace emotext {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) {
    for (const auto v : row) sum += v;
  }
  return sum;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t sum = 0;
  for (std::size_t l = 0; l < kNumEmotions; ++l) sum += counts[l][l];
  return sum;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    for (std::size_t j = 0; j < kNumEmotions; ++j) counts[i][j] += other.counts[i][j];
  }
  return *this;
}

ConfusionMatrix confusion_matrix(std::span<const Emotion> truth,
                                 std::span<const Emotion> predicted) {
  if (truth.size() != predicted.size()) {
    throw Error("confusion matrix needs equal lengths, got " + std::to_string(truth.size()) +
                " and " + std::to_string(predicted.size()));
  }
  if (truth.empty()) throw Error("confusion matrix needs at least one instance");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) cm.add(truth[i], predicted[i]);
  return cm;
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

LabelMetrics label_metrics(const ConfusionMatrix& cm, Emotion label) {
  const std::size_t l = label_index(label);
  std::uint64_t row = 0;
  std::uint64_t column = 0;
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    row += cm.counts[l][k];
    column += cm.counts[k][l];
  }
  const std::uint64_t tp = cm.counts[l][l];
  LabelMetrics m;
  m.precision = ratio(tp, column);
  m.recall = ratio(tp, row);
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

double accuracy(const ConfusionMatrix& cm) {
  const std::uint64_t total = cm.total();
  if (total == 0) throw Error("accuracy of an empty confusion matrix");
  return ratio(cm.trace(), total);
}

MacroAverage macro_average(std::span<const LabelMetrics> per_label) {
  if (per_label.size() != kNumEmotions) {
    throw Error("macro average needs metrics for all " + std::to_string(kNumEmotions) +
                " labels, got " + std::to_string(per_label.size()));
  }
  MacroAverage avg;
  for (const auto& m : per_label) {
    avg.precision += m.precision;
    avg.recall += m.recall;
    avg.f1 += m.f1;
  }
  const auto n = static_cast<double>(kNumEmotions);
  avg.precision /= n;
  avg.recall /= n;
  avg.f1 /= n;
  return avg;
}

EvaluationReport evaluate(ClassifierKind classifier, const ConfusionMatrix& cm,
                          double train_ms, double predict_ms) {
  EvaluationReport r;
  r.classifier = classifier;
  for (std::size_t l = 0; l < kNumEmotions; ++l) r.per_label[l] = label_metrics(cm, label_at(l));
  const MacroAverage macro = macro_average(r.per_label);
  r.macro_precision = macro.precision;
  r.macro_recall = macro.recall;
  r.macro_f1 = macro.f1;
  r.accuracy = accuracy(cm);
  r.cpu_time_train_ms = train_ms;
  r.cpu_time_predict_ms = predict_ms;
  return r;
}

}  // namespace emotext
