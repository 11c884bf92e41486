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

// Linear classifiers: logistic regression (one-vs-rest delta rule and
// reference-label softmax), hinge-loss SVM and plain SGD.

#ifndef EMOTEXT_LINEAR_H_
#define EMOTEXT_LINEAR_H_

#include <span>
#include <vector>

#include "emotext/classifiers.h"

namespace emotext {

double sigmoid(double z);

// One delta-rule step on a binary logistic unit:
//   p = sigmoid(bias + w.x)
//   w_j += rate * (target - p) * p * (1 - p) * x_j,  bias += same factor.
void lr_update(double& bias, std::span<double> weights, const SparseVector& x,
               double target, double rate);

// One subgradient step of the L2-regularized hinge loss, label in {-1, +1}:
//   margin >= 1: w <- (1 - eta*lambda) w
//   otherwise:   w <- (1 - eta*lambda) w + eta*y*x,  bias += eta*y
void hinge_step(double& bias, std::span<double> weights, const SparseVector& x,
                int label, double eta, double lambda);

// Softmax against an implicit reference class with activation 0:
// activations z_1..z_{K-1} map to K probabilities
//   p_k = e^{z_k} / (1 + sum_j e^{z_j}),  p_K = 1 / (1 + sum_j e^{z_j}).
std::vector<double> softmax_scores(std::span<const double> activations);

// K independent binary scorers sharing one parameter layout. Used for the
// one-vs-rest logistic, SVM and SGD families.
class LinearModel final : public TrainedModel {
 public:
  enum class Output {
    kRaw,                 // decision values bias + w.x
    kNormalizedSigmoid,   // sigmoid per label, rescaled to sum to 1
  };

  struct Params {
    ClassifierKind kind = ClassifierKind::kLinearSvm;
    Output output = Output::kRaw;
    std::size_t width = 0;
    LabelScores bias{};
    std::vector<double> weights;  // row-major [label][term]
  };

  explicit LinearModel(Params params);

  static LinearModel fit_logistic(const LogisticConfig& config, const FeatureMatrix& x,
                                  std::span<const Emotion> y, std::uint64_t seed);
  static LinearModel fit_svm(const LinearSvmConfig& config, const FeatureMatrix& x,
                             std::span<const Emotion> y, std::uint64_t seed);
  static LinearModel fit_sgd(const SgdConfig& config, const FeatureMatrix& x,
                             std::span<const Emotion> y, std::uint64_t seed);

  ClassifierKind kind() const override { return params_.kind; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  LabelScores decision_values(const SparseVector& x) const;

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  Params params_;
};

// Multinomial logistic regression with the last label (Guilt) as reference.
class SoftmaxRegressionModel final : public TrainedModel {
 public:
  static constexpr std::size_t kFreeLabels = kNumEmotions - 1;

  struct Params {
    std::size_t width = 0;
    std::array<double, kFreeLabels> bias{};
    std::vector<double> weights;  // row-major [label][term], K-1 rows
  };

  explicit SoftmaxRegressionModel(Params params);

  static SoftmaxRegressionModel fit(const LogisticConfig& config, const FeatureMatrix& x,
                                    std::span<const Emotion> y, std::uint64_t seed);

  ClassifierKind kind() const override { return ClassifierKind::kLogisticRegression; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  LabelScores probabilities(const SparseVector& x) const;

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  Params params_;
};

}  // namespace emotext

#endif  // EMOTEXT_LINEAR_H_
