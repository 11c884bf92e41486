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

#include "emotext/knn.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace emotext {
namespace {

void check_k(std::size_t available, std::size_t k) {
  if (k < 1 || k > available) {
    throw Error("k = " + std::to_string(k) + " must lie in [1, " +
                std::to_string(available) + "]");
  }
}

double cosine_distance(double dot, double sq_a, double sq_b) {
  if (sq_a == 0.0 || sq_b == 0.0) return 1.0;
  return 1.0 - dot / (std::sqrt(sq_a) * std::sqrt(sq_b));
}

double euclidean_distance(double dot, double sq_a, double sq_b) {
  return std::sqrt(std::max(0.0, sq_a + sq_b - 2.0 * dot));
}

}  // namespace

LabelScores knn_vote_scores(std::span<const Neighbor> neighbors, std::size_t k) {
  check_k(neighbors.size(), k);
  std::array<std::size_t, kNumEmotions> votes{};
  std::array<std::size_t, kNumEmotions> first{};
  first.fill(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t l = label_index(neighbors[i].label);
    if (votes[l]++ == 0) first[l] = i;
  }
  LabelScores scores{};
  const auto kd = static_cast<double>(k);
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    if (votes[l] == 0) continue;
    const double credit = static_cast<double>(k - first[l]) / (kd + 1.0);
    scores[l] = (static_cast<double>(votes[l]) + credit) / kd;
  }
  return scores;
}

Emotion knn_vote(std::span<const Neighbor> neighbors, std::size_t k) {
  check_k(neighbors.size(), k);
  std::array<std::size_t, kNumEmotions> votes{};
  for (std::size_t i = 0; i < k; ++i) ++votes[label_index(neighbors[i].label)];
  const std::size_t top = *std::max_element(votes.begin(), votes.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (votes[label_index(neighbors[i].label)] == top) return neighbors[i].label;
  }
  return neighbors.front().label;
}

KnnModel::KnnModel(Params params) : params_(std::move(params)) {
  if (params_.rows.size() != params_.labels.size()) {
    throw Error("KNN rows and labels differ in length");
  }
  check_k(params_.rows.size(), params_.config.k);
  squared_norms_.reserve(params_.rows.size());
  for (const auto& row : params_.rows) squared_norms_.push_back(row.squared_norm());
  columns_ = std::make_shared<const ColumnIndex>(params_.rows, params_.width);
}

KnnModel KnnModel::fit(const KnnConfig& config, const FeatureMatrix& x,
                       std::span<const Emotion> y) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  Params p;
  p.config = config;
  p.width = x.width;
  p.rows = x.rows;
  p.labels.assign(y.begin(), y.end());
  return KnnModel(std::move(p));
}

std::vector<double> KnnModel::distances(const SparseVector& x) const {
  const std::size_t n = params_.rows.size();
  std::vector<double> dots(n, 0.0);
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    const std::size_t f = x.indices[k];
    for (std::size_t e = columns_->begin(f); e < columns_->end(f); ++e) {
      dots[columns_->rows[e]] += x.values[k] * columns_->values[e];
    }
  }
  const double sq_x = x.squared_norm();
  for (std::size_t r = 0; r < n; ++r) {
    dots[r] = params_.config.distance == DistanceMetric::kCosine
                  ? cosine_distance(dots[r], sq_x, squared_norms_[r])
                  : euclidean_distance(dots[r], sq_x, squared_norms_[r]);
  }
  return dots;
}

double KnnModel::distance(const SparseVector& x, std::size_t row) const {
  const auto& r = params_.rows.at(row);
  double dot = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < x.nnz() && b < r.nnz()) {
    if (x.indices[a] < r.indices[b]) {
      ++a;
    } else if (r.indices[b] < x.indices[a]) {
      ++b;
    } else {
      dot += x.values[a++] * r.values[b++];
    }
  }
  return params_.config.distance == DistanceMetric::kCosine
             ? cosine_distance(dot, x.squared_norm(), squared_norms_[row])
             : euclidean_distance(dot, x.squared_norm(), squared_norms_[row]);
}

std::vector<Neighbor> KnnModel::nearest(const SparseVector& x) const {
  const auto dist = distances(x);
  std::vector<std::size_t> order(dist.size());
  std::iota(order.begin(), order.end(), 0);
  const auto closer = [&](std::size_t a, std::size_t b) {
    return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
  };
  const std::size_t k = params_.config.k;
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), closer);
  std::vector<Neighbor> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({params_.labels[order[i]], dist[order[i]]});
  }
  return out;
}

PredictOutcome KnnModel::predict_row(const SparseVector& x) const {
  const auto neighbors = nearest(x);
  return outcome_from_scores(knn_vote_scores(neighbors, params_.config.k));
}

}  // namespace emotext
