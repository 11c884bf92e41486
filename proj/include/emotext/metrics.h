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

#ifndef EMOTEXT_METRICS_H_
#define EMOTEXT_METRICS_H_

#include <array>
#include <cstdint>
#include <span>

#include "emotext/classifiers.h"
#include "emotext/labels.h"

namespace emotext {

// Rows are the true label, columns the predicted label.
struct ConfusionMatrix {
  std::array<std::array<std::uint64_t, kNumEmotions>, kNumEmotions> counts{};

  void add(Emotion truth, Emotion predicted) {
    ++counts[label_index(truth)][label_index(predicted)];
  }
  std::uint64_t at(Emotion truth, Emotion predicted) const {
    return counts[label_index(truth)][label_index(predicted)];
  }
  std::uint64_t total() const;
  std::uint64_t trace() const;

  ConfusionMatrix& operator+=(const ConfusionMatrix& other);
  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion_matrix(std::span<const Emotion> truth,
                                 std::span<const Emotion> predicted);

struct LabelMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const LabelMetrics&) const = default;
};

// 2PR / (P + R), or 0 when P + R = 0.
double f1_score(double precision, double recall);

// One-vs-rest metrics for `label`; a zero denominator yields 0.
LabelMetrics label_metrics(const ConfusionMatrix& cm, Emotion label);

// trace / total. Throws on an empty matrix.
double accuracy(const ConfusionMatrix& cm);

struct MacroAverage {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const MacroAverage&) const = default;
};

// Unweighted means; `per_label` must hold one entry per label.
MacroAverage macro_average(std::span<const LabelMetrics> per_label);

struct EvaluationReport {
  ClassifierKind classifier = ClassifierKind::kNaiveBayes;
  std::array<LabelMetrics, kNumEmotions> per_label{};
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  double cpu_time_train_ms = 0.0;
  double cpu_time_predict_ms = 0.0;

  bool operator==(const EvaluationReport&) const = default;
};

EvaluationReport evaluate(ClassifierKind classifier, const ConfusionMatrix& cm,
                          double train_ms, double predict_ms);

}  // namespace emotext

#endif  // EMOTEXT_METRICS_H_
