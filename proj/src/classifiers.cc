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

#include "emotext/classifiers.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "emotext/bpn.h"
#include "emotext/knn.h"
#include "emotext/linear.h"
#include "emotext/naive_bayes.h"
#include "emotext/parallel.h"
#include "emotext/trees.h"

namespace emotext {
namespace {

struct KindNames {
  ClassifierKind kind;
  std::string_view name;
  std::string_view display;
};

constexpr std::array<KindNames, 8> kKindNames = {{
    {ClassifierKind::kNaiveBayes, "naive_bayes", "Naive Bayes"},
    {ClassifierKind::kLogisticRegression, "logistic_regression", "Logistic Regression"},
    {ClassifierKind::kLinearSvm, "linear_svm", "Support Vector Machine (SVM)"},
    {ClassifierKind::kSgdLinear, "sgd_linear", "Stochastic Gradient (SGD)"},
    {ClassifierKind::kKnn, "knn", "K-Nearest Neighbor (KNN)"},
    {ClassifierKind::kRandomForest, "random_forest", "Random Forest (RF)"},
    {ClassifierKind::kGradientBoost, "gradient_boost", "Gradient Boosting"},
    {ClassifierKind::kBpn, "bpn", "Back Propagation Neural Classifier (BPN)"},
}};

const KindNames& names_of(ClassifierKind kind) {
  return kKindNames.at(static_cast<std::size_t>(kind));
}

void require(bool ok, std::string_view kind, std::string_view what) {
  if (!ok) throw Error(std::string(kind) + ": " + std::string(what));
}

}  // namespace

std::string_view kind_name(ClassifierKind kind) { return names_of(kind).name; }

std::string_view kind_display_name(ClassifierKind kind) { return names_of(kind).display; }

ClassifierKind parse_kind(std::string_view name) {
  for (const auto& entry : kKindNames) {
    if (entry.name == name) return entry.kind;
  }
  throw Error("unknown classifier '" + std::string(name) + "'");
}

bool is_probabilistic(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
    case ClassifierKind::kLogisticRegression:
    case ClassifierKind::kGradientBoost:
    case ClassifierKind::kBpn:
      return true;
    default:
      return false;
  }
}

FeatureScheme preferred_scheme(ClassifierKind kind, FeatureScheme requested) {
  return kind == ClassifierKind::kNaiveBayes ? FeatureScheme::kCount : requested;
}

void ClassifierConfig::validate(ClassifierKind kind) const {
  const std::string_view name = kind_name(kind);
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      require(naive_bayes.alpha > 0.0, name, "alpha must be positive");
      break;
    case ClassifierKind::kLogisticRegression:
      require(logistic.learning_rate > 0.0, name, "learning_rate must be positive");
      require(logistic.epochs >= 1, name, "epochs must be at least 1");
      break;
    case ClassifierKind::kLinearSvm:
      require(linear_svm.lambda > 0.0, name, "lambda must be positive");
      require(linear_svm.learning_rate > 0.0, name, "learning_rate must be positive");
      require(linear_svm.epochs >= 1, name, "epochs must be at least 1");
      break;
    case ClassifierKind::kSgdLinear:
      require(sgd.learning_rate > 0.0, name, "learning_rate must be positive");
      require(sgd.decay >= 0.0, name, "decay must be non-negative");
      require(sgd.epochs >= 1, name, "epochs must be at least 1");
      break;
    case ClassifierKind::kKnn:
      require(knn.k >= 1, name, "k must be at least 1");
      break;
    case ClassifierKind::kRandomForest:
      require(random_forest.n_trees >= 1, name, "n_trees must be at least 1");
      require(random_forest.min_samples_split >= 2, name, "min_samples_split must be at least 2");
      break;
    case ClassifierKind::kGradientBoost:
      require(gradient_boost.rounds >= 1, name, "rounds must be at least 1");
      require(gradient_boost.shrinkage > 0.0, name, "shrinkage must be positive");
      require(gradient_boost.tree_depth >= 1, name, "tree_depth must be at least 1");
      break;
    case ClassifierKind::kBpn:
      require(bpn.hidden_units >= 1, name, "hidden_units must be at least 1");
      require(bpn.learning_rate > 0.0, name, "learning_rate must be positive");
      require(bpn.epochs >= 1, name, "epochs must be at least 1");
      break;
  }
}

PredictOutcome TrainedModel::predict(const SparseVector& x) const {
  if (x.min_width() > width()) {
    throw Error("feature index " + std::to_string(x.min_width() - 1) +
                " is outside the model width " + std::to_string(width()));
  }
  return predict_row(x);
}

std::vector<PredictOutcome> TrainedModel::predict_all(const FeatureMatrix& matrix) const {
  if (matrix.width > width()) {
    throw Error("feature matrix width " + std::to_string(matrix.width) +
                " exceeds the model width " + std::to_string(width()));
  }
  std::vector<PredictOutcome> out(matrix.size());
  parallel_for(matrix.size(), [&](std::size_t i) { out[i] = predict(matrix.rows[i]); });
  return out;
}

LabelScores softmax(const LabelScores& logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  LabelScores p{};
  if (std::isinf(top) && top < 0) throw Error("softmax of all -inf logits");
  double sum = 0.0;
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    p[l] = std::isinf(logits[l]) && logits[l] < 0 ? 0.0 : std::exp(logits[l] - top);
    sum += p[l];
  }
  for (double& v : p) v /= sum;
  return p;
}

PredictOutcome outcome_from_scores(const LabelScores& scores) {
  return {label_at(argmax_label(scores)), scores};
}

std::unique_ptr<TrainedModel> fit(ClassifierKind kind, const ClassifierConfig& config,
                                  const FeatureMatrix& x, std::span<const Emotion> y,
                                  std::uint64_t seed) {
  config.validate(kind);
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      return std::make_unique<NaiveBayesModel>(NaiveBayesModel::fit(config.naive_bayes, x, y));
    case ClassifierKind::kLogisticRegression:
      if (config.logistic.mode == LogisticMode::kMultinomial) {
        return std::make_unique<SoftmaxRegressionModel>(
            SoftmaxRegressionModel::fit(config.logistic, x, y, seed));
      }
      return std::make_unique<LinearModel>(LinearModel::fit_logistic(config.logistic, x, y, seed));
    case ClassifierKind::kLinearSvm:
      return std::make_unique<LinearModel>(LinearModel::fit_svm(config.linear_svm, x, y, seed));
    case ClassifierKind::kSgdLinear:
      return std::make_unique<LinearModel>(LinearModel::fit_sgd(config.sgd, x, y, seed));
    case ClassifierKind::kKnn:
      return std::make_unique<KnnModel>(KnnModel::fit(config.knn, x, y));
    case ClassifierKind::kRandomForest:
      return std::make_unique<RandomForestModel>(
          RandomForestModel::fit(config.random_forest, x, y, seed));
    case ClassifierKind::kGradientBoost:
      return std::make_unique<GradientBoostModel>(
          GradientBoostModel::fit(config.gradient_boost, x, y));
    case ClassifierKind::kBpn:
      return std::make_unique<BpnModel>(BpnModel::fit(config.bpn, x, y, seed));
  }
  throw Error("unhandled classifier kind");
}

namespace detail {

void check_training_set(const FeatureMatrix& x, std::span<const Emotion> y,
                        bool needs_two_labels) {
  if (x.size() != y.size()) {
    throw Error("training set has " + std::to_string(x.size()) + " rows but " +
                std::to_string(y.size()) + " labels");
  }
  if (y.empty()) throw Error("training set is empty");
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& row = x.rows[i];
    if (row.min_width() > x.width) {
      throw Error("training row " + std::to_string(i) + " is wider than the matrix");
    }
    for (const double v : row.values) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw Error("training row " + std::to_string(i) + " has a negative or non-finite value");
      }
    }
  }
  if (needs_two_labels && distinct_labels(y) < 2) {
    throw Error("training set needs at least two distinct labels");
  }
}

std::size_t distinct_labels(std::span<const Emotion> y) {
  std::array<bool, kNumEmotions> seen{};
  for (const auto label : y) seen[label_index(label)] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

}  // namespace detail

}  // namespace emotext
