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

#include "emotext/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace emotext {

NaiveBayesModel::NaiveBayesModel(Params params) : params_(std::move(params)) {
  if (params_.log_likelihood.size() != kNumEmotions * params_.width) {
    throw Error("naive Bayes likelihood table has the wrong size");
  }
}

NaiveBayesModel NaiveBayesModel::fit(const NaiveBayesConfig& config, const FeatureMatrix& x,
                                     std::span<const Emotion> y) {
  detail::check_training_set(x, y, /*needs_two_labels=*/false);
  const std::size_t width = x.width;

  std::array<std::size_t, kNumEmotions> docs{};
  std::vector<double> term_mass(kNumEmotions * width, 0.0);
  LabelScores label_mass{};
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    const std::size_t l = label_index(y[i]);
    ++docs[l];
    const auto& row = x.rows[i];
    for (std::size_t k = 0; k < row.nnz(); ++k) {
      term_mass[l * width + row.indices[k]] += row.values[k];
      label_mass[l] += row.values[k];
    }
  }

  Params p;
  p.config = config;
  p.width = width;
  p.log_likelihood.resize(kNumEmotions * width);
  const double n = static_cast<double>(x.rows.size());
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    p.log_prior[l] = docs[l] == 0 ? -std::numeric_limits<double>::infinity()
                                  : std::log(static_cast<double>(docs[l]) / n);
    const double denominator =
        std::log(label_mass[l] + config.alpha * static_cast<double>(width));
    for (std::size_t t = 0; t < width; ++t) {
      p.log_likelihood[l * width + t] =
          std::log(term_mass[l * width + t] + config.alpha) - denominator;
    }
  }
  return NaiveBayesModel(std::move(p));
}

LabelScores NaiveBayesModel::log_joint(const SparseVector& x) const {
  LabelScores scores = params_.log_prior;
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    if (!std::isfinite(scores[l])) continue;
    const double* row = params_.log_likelihood.data() + l * params_.width;
    for (std::size_t k = 0; k < x.nnz(); ++k) scores[l] += x.values[k] * row[x.indices[k]];
  }
  return scores;
}

LabelScores NaiveBayesModel::posteriors(const SparseVector& x) const {
  return softmax(log_joint(x));
}

PredictOutcome NaiveBayesModel::predict_row(const SparseVector& x) const {
  return outcome_from_scores(posteriors(x));
}

}  // namespace emotext
