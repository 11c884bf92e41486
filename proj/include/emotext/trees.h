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

// Tree ensembles: a CART random forest (Gini, bootstrap, per-split feature
// sampling) and gradient-boosted regression trees on softmax cross-entropy.
//
// Both learners require non-negative feature values; a row goes left when
// its value for the split feature is <= threshold (absent features are 0).

#ifndef EMOTEXT_TREES_H_
#define EMOTEXT_TREES_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "emotext/classifiers.h"

namespace emotext {

// Binary tree stored as a flat node array, root at index 0.
template <typename Leaf>
struct BinaryTree {
  struct Node {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    Leaf leaf{};

    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes;

  const Leaf& evaluate(const SparseVector& x) const {
    std::size_t n = 0;
    while (nodes[n].feature >= 0) {
      const auto f = static_cast<std::uint32_t>(nodes[n].feature);
      n = x.at(f) <= nodes[n].threshold ? nodes[n].left : nodes[n].right;
    }
    return nodes[n].leaf;
  }

  std::size_t depth() const { return depth_from(0); }

  bool operator==(const BinaryTree&) const = default;

 private:
  std::size_t depth_from(std::size_t n) const {
    if (nodes[n].feature < 0) return 0;
    return 1 + std::max(depth_from(nodes[n].left), depth_from(nodes[n].right));
  }
};

using ClassificationTree = BinaryTree<Emotion>;
using RegressionTree = BinaryTree<double>;

// Plurality vote; equal counts resolve by the fixed label order.
Emotion forest_vote(std::span<const Emotion> votes);

class RandomForestModel final : public TrainedModel {
 public:
  struct Params {
    RandomForestConfig config;
    std::size_t width = 0;
    std::vector<ClassificationTree> trees;
  };

  explicit RandomForestModel(Params params);

  // Tree t draws from Rng::substream(seed, t), so the result does not depend
  // on how trees are scheduled across workers.
  static RandomForestModel fit(const RandomForestConfig& config, const FeatureMatrix& x,
                               std::span<const Emotion> y, std::uint64_t seed);

  // One unpruned CART tree on a bootstrap sample.
  static ClassificationTree grow_tree(const RandomForestConfig& config,
                                      const FeatureMatrix& x, std::span<const Emotion> y,
                                      std::uint64_t seed, std::size_t tree_index);

  ClassifierKind kind() const override { return ClassifierKind::kRandomForest; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  std::vector<Emotion> tree_votes(const SparseVector& x) const;

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  Params params_;
};

class GradientBoostModel final : public TrainedModel {
 public:
  struct Params {
    GradientBoostConfig config;
    std::size_t width = 0;
    LabelScores initial{};
    // trees[round * kNumEmotions + label]
    std::vector<RegressionTree> trees;
  };

  explicit GradientBoostModel(Params params);

  static GradientBoostModel fit(const GradientBoostConfig& config, const FeatureMatrix& x,
                                std::span<const Emotion> y);

  ClassifierKind kind() const override { return ClassifierKind::kGradientBoost; }
  std::size_t width() const override { return params_.width; }
  const Params& params() const { return params_; }

  // initial + shrinkage * sum of tree outputs, per label.
  LabelScores raw_scores(const SparseVector& x) const;

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  Params params_;
};

// Stage-wise fitting of GradientBoostModel. Scores start at the clipped
// log-priors of the training labels; every round fits one depth-limited
// regression tree per label to the pseudo-residuals y_k - p_k and adds
// shrinkage times its Newton leaf values
//   (K - 1) / K * sum(r) / sum(|r| (1 - |r|)).
class GradientBoostTrainer {
 public:
  GradientBoostTrainer(const FeatureMatrix& x, std::span<const Emotion> y,
                       const GradientBoostConfig& config);
  ~GradientBoostTrainer();
  GradientBoostTrainer(const GradientBoostTrainer&) = delete;
  GradientBoostTrainer& operator=(const GradientBoostTrainer&) = delete;

  void run_round();

  std::size_t rounds_done() const { return params_.trees.size() / kNumEmotions; }

  // Current per-row scores F(x_i).
  const std::vector<LabelScores>& scores() const { return scores_; }

  // Mean cross-entropy -log softmax(F(x_i))[y_i].
  double training_loss() const;

  // Pseudo-residuals y_ik - p_ik at the current scores.
  std::vector<LabelScores> residuals() const;

  // Regression tree of the configured depth fitted to `targets` (squared-error
  // splits), leaves holding the Newton step for those targets.
  RegressionTree fit_tree(std::span<const double> targets) const;

  GradientBoostModel model() const { return GradientBoostModel(params_); }

 private:
  struct Columns;

  const FeatureMatrix& x_;
  std::vector<Emotion> y_;
  GradientBoostModel::Params params_;
  std::vector<LabelScores> scores_;
  std::unique_ptr<Columns> columns_;
};

}  // namespace emotext

#endif  // EMOTEXT_TREES_H_
