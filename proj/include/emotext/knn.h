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

#ifndef EMOTEXT_KNN_H_
#define EMOTEXT_KNN_H_

#include <memory>
#include <vector>

#include "emotext/classifiers.h"

namespace emotext {

struct Neighbor {
  Emotion label = Emotion::kJoy;
  double distance = 0.0;
};

// Plurality label among the first k neighbors (sorted by ascending distance).
// Ties go to the tied label whose nearest member comes first.
Emotion knn_vote(std::span<const Neighbor> neighbors, std::size_t k);

// Per-label vote share plus a tie-break credit below one vote:
//   score = (votes + (k - first_position) / (k + 1)) / k  for voted labels.
// Its tie-break argmax equals knn_vote.
LabelScores knn_vote_scores(std::span<const Neighbor> neighbors, std::size_t k);

// Unweighted k-nearest-neighbor vote over retained training rows.
//
// Cosine distance is 1 - cos(a, b), defined as 1 when either vector is zero;
// equal distances order by training row index.
class KnnModel final : public TrainedModel {
 public:
  struct Params {
    KnnConfig config;
    std::size_t width = 0;
    std::vector<SparseVector> rows;
    std::vector<Emotion> labels;
  };

  explicit KnnModel(Params params);

  static KnnModel fit(const KnnConfig& config, const FeatureMatrix& x,
                      std::span<const Emotion> y);

  ClassifierKind kind() const override { return ClassifierKind::kKnn; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  // The k nearest training rows, ascending.
  std::vector<Neighbor> nearest(const SparseVector& x) const;

  double distance(const SparseVector& x, std::size_t row) const;

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  std::vector<double> distances(const SparseVector& x) const;

  Params params_;
  std::vector<double> squared_norms_;
  std::shared_ptr<const ColumnIndex> columns_;
};

}  // namespace emotext

#endif  // EMOTEXT_KNN_H_
