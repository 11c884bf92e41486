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

// Common fit/predict interface over the eight classifier families.
//
// Every family is a pure function of (features, labels, config, seed): two
// fits with equal inputs produce bit-identical parameters, independent of the
// worker count. Fitted models are immutable and safe to share across threads.

#ifndef EMOTEXT_CLASSIFIERS_H_
#define EMOTEXT_CLASSIFIERS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "emotext/features.h"
#include "emotext/labels.h"
#include "emotext/sparse.h"

namespace emotext {

enum class ClassifierKind : int {
  kNaiveBayes = 0,
  kLogisticRegression,
  kLinearSvm,
  kSgdLinear,
  kKnn,
  kRandomForest,
  kGradientBoost,
  kBpn,
};

inline constexpr std::array<ClassifierKind, 8> kAllClassifierKinds = {
    ClassifierKind::kNaiveBayes,  ClassifierKind::kLogisticRegression,
    ClassifierKind::kLinearSvm,   ClassifierKind::kSgdLinear,
    ClassifierKind::kKnn,         ClassifierKind::kRandomForest,
    ClassifierKind::kGradientBoost, ClassifierKind::kBpn};

// "naive_bayes", "logistic_regression", ...
std::string_view kind_name(ClassifierKind kind);
// Human-readable name used in report tables.
std::string_view kind_display_name(ClassifierKind kind);
ClassifierKind parse_kind(std::string_view name);

// Families whose scores are a probability distribution over the labels.
bool is_probabilistic(ClassifierKind kind);

// Multinomial naive Bayes consumes raw counts; every other family TF-IDF.
FeatureScheme preferred_scheme(ClassifierKind kind, FeatureScheme requested);

struct NaiveBayesConfig {
  double alpha = 1.0;

  bool operator==(const NaiveBayesConfig&) const = default;
};

enum class LogisticMode { kOneVsRest, kMultinomial };

struct LogisticConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 100;
  LogisticMode mode = LogisticMode::kOneVsRest;

  bool operator==(const LogisticConfig&) const = default;
};

struct LinearSvmConfig {
  double lambda = 1e-4;
  double learning_rate = 0.1;  // eta_t = learning_rate / (1 + learning_rate * lambda * t)
  std::size_t epochs = 100;

  bool operator==(const LinearSvmConfig&) const = default;
};

enum class SgdLoss { kHinge, kLog };

struct SgdConfig {
  SgdLoss loss = SgdLoss::kHinge;
  double learning_rate = 0.1;  // eta_epoch = learning_rate / (1 + decay * epoch)
  double decay = 0.01;
  std::size_t epochs = 100;

  bool operator==(const SgdConfig&) const = default;
};

enum class DistanceMetric { kCosine, kEuclidean };

struct KnnConfig {
  std::size_t k = 25;
  DistanceMetric distance = DistanceMetric::kCosine;

  bool operator==(const KnnConfig&) const = default;
};

struct RandomForestConfig {
  std::size_t n_trees = 200;
  std::size_t max_depth = 0;           // 0 = unbounded
  std::size_t min_samples_split = 2;
  std::size_t features_per_split = 0;  // 0 = ceil(sqrt(width))

  bool operator==(const RandomForestConfig&) const = default;
};

struct GradientBoostConfig {
  std::size_t rounds = 100;
  double shrinkage = 0.1;
  std::size_t tree_depth = 3;

  bool operator==(const GradientBoostConfig&) const = default;
};

struct BpnConfig {
  std::size_t hidden_units = 64;
  double learning_rate = 0.01;
  std::size_t epochs = 50;

  bool operator==(const BpnConfig&) const = default;
};

// Hyperparameters of every family; fit() reads the block matching its kind.
struct ClassifierConfig {
  NaiveBayesConfig naive_bayes;
  LogisticConfig logistic;
  LinearSvmConfig linear_svm;
  SgdConfig sgd;
  KnnConfig knn;
  RandomForestConfig random_forest;
  GradientBoostConfig gradient_boost;
  BpnConfig bpn;

  // Throws on non-positive rates and zero counts for `kind`.
  void validate(ClassifierKind kind) const;

  bool operator==(const ClassifierConfig&) const = default;
};

struct PredictOutcome {
  Emotion label = Emotion::kJoy;
  LabelScores scores{};

  bool operator==(const PredictOutcome&) const = default;
};

class TrainedModel {
 public:
  virtual ~TrainedModel() = default;

  virtual ClassifierKind kind() const = 0;

  // Feature width the model was fitted on.
  virtual std::size_t width() const = 0;

  // Throws when x uses a feature index >= width().
  PredictOutcome predict(const SparseVector& x) const;

  // Row-parallel; output order matches the matrix.
  std::vector<PredictOutcome> predict_all(const FeatureMatrix& matrix) const;

 protected:
  virtual PredictOutcome predict_row(const SparseVector& x) const = 0;
};

// exp(z - max z) normalized to sum 1; -inf logits map to probability 0.
LabelScores softmax(const LabelScores& logits);

// Builds the outcome for `scores` with label = tie-break argmax.
PredictOutcome outcome_from_scores(const LabelScores& scores);

// Checks |rows| = |y| >= 1, row widths and non-negative values, then
// dispatches to the family trainer.
std::unique_ptr<TrainedModel> fit(ClassifierKind kind, const ClassifierConfig& config,
                                  const FeatureMatrix& x, std::span<const Emotion> y,
                                  std::uint64_t seed);

namespace detail {

// Validation shared by the family trainers.
void check_training_set(const FeatureMatrix& x, std::span<const Emotion> y,
                        bool needs_two_labels);

// Number of different labels present in y.
std::size_t distinct_labels(std::span<const Emotion> y);

}  // namespace detail

}  // namespace emotext

#endif  // EMOTEXT_CLASSIFIERS_H_
