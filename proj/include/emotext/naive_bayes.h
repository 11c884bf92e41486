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

#ifndef EMOTEXT_NAIVE_BAYES_H_
#define EMOTEXT_NAIVE_BAYES_H_

#include <vector>

#include "emotext/classifiers.h"

namespace emotext {

// Multinomial naive Bayes over term counts with additive (Laplace) smoothing:
//
//   P(label | x) ∝ P(label) * prod_t P(t | label)^x_t
//   P(t | label) = (N_label,t + alpha) / (N_label + alpha * V)
//
// Labels absent from training have log-prior -inf and posterior 0.
class NaiveBayesModel final : public TrainedModel {
 public:
  struct Params {
    NaiveBayesConfig config;
    std::size_t width = 0;
    LabelScores log_prior{};
    // log P(t | label), row-major [label][term].
    std::vector<double> log_likelihood;
  };

  explicit NaiveBayesModel(Params params);

  static NaiveBayesModel fit(const NaiveBayesConfig& config, const FeatureMatrix& x,
                             std::span<const Emotion> y);

  ClassifierKind kind() const override { return ClassifierKind::kNaiveBayes; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  // Unnormalized log P(label) + sum_t x_t log P(t | label).
  LabelScores log_joint(const SparseVector& x) const;

  // Normalized posteriors via log-sum-exp. Empty x gives the priors.
  LabelScores posteriors(const SparseVector& x) const;

  double log_likelihood(Emotion label, std::size_t term) const {
    return params_.log_likelihood[label_index(label) * params_.width + term];
  }

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  Params params_;
};

}  // namespace emotext

#endif  // EMOTEXT_NAIVE_BAYES_H_
