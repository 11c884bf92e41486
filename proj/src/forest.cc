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

#include <algorithm>
#include <cmath>

#include "emotext/parallel.h"
#include "emotext/random.h"
#include "emotext/trees.h"

namespace emotext {
namespace {

using ClassCounts = std::array<std::uint64_t, kNumEmotions>;

std::uint64_t total(const ClassCounts& c) {
  std::uint64_t sum = 0;
  for (const auto v : c) sum += v;
  return sum;
}

Emotion majority(const ClassCounts& c) {
  std::size_t best = 0;
  for (std::size_t l = 1; l < kNumEmotions; ++l) {
    if (c[l] > c[best]) best = l;
  }
  return label_at(best);
}

// Sum over children of sum_c n_c^2 / n; maximizing it minimizes the weighted
// Gini impurity of the split.
double gini_score(const ClassCounts& left, const ClassCounts& right) {
  double score = 0.0;
  for (const ClassCounts* side : {&left, &right}) {
    const auto n = static_cast<double>(total(*side));
    double sq = 0.0;
    for (const auto v : *side) sq += static_cast<double>(v) * static_cast<double>(v);
    score += sq / n;
  }
  return score;
}

struct Split {
  std::int32_t feature = -1;
  double threshold = 0.0;
  double score = -1.0;
};

struct Entry {
  double value;
  std::uint32_t row;
};

class TreeGrower {
 public:
  TreeGrower(const RandomForestConfig& config, const FeatureMatrix& x,
             std::span<const Emotion> y, std::size_t mtry)
      : config_(config), x_(x), y_(y), mtry_(mtry),
        feature_stamp_(x.width, 0), candidate_slot_(x.width, -1) {}

  ClassificationTree grow(Rng& rng) {
    const std::size_t n = x_.rows.size();
    weight_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) ++weight_[rng.uniform_below(n)];
    std::vector<std::uint32_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (weight_[i] > 0) rows.push_back(static_cast<std::uint32_t>(i));
    }

    struct Pending {
      std::uint32_t node;
      std::size_t begin;
      std::size_t end;
      std::size_t depth;
    };
    ClassificationTree tree;
    tree.nodes.emplace_back();
    std::vector<Pending> stack = {{0, 0, rows.size(), 0}};
    while (!stack.empty()) {
      const Pending item = stack.back();
      stack.pop_back();
      const std::span<std::uint32_t> node_rows(rows.data() + item.begin, item.end - item.begin);
      ClassCounts counts{};
      for (const auto r : node_rows) counts[label_index(y_[r])] += weight_[r];
      const std::uint64_t size = total(counts);
      tree.nodes[item.node].leaf = majority(counts);

      const bool pure = *std::max_element(counts.begin(), counts.end()) == size;
      const bool too_small = size < config_.min_samples_split;
      const bool too_deep = config_.max_depth > 0 && item.depth >= config_.max_depth;
      if (pure || too_small || too_deep) continue;

      const Split split = find_split(node_rows, counts, rng);
      if (split.feature < 0) continue;

      const auto f = static_cast<std::uint32_t>(split.feature);
      const auto mid = std::stable_partition(
          node_rows.begin(), node_rows.end(),
          [&](std::uint32_t r) { return x_.rows[r].at(f) <= split.threshold; });
      const std::size_t left_end = item.begin + static_cast<std::size_t>(mid - node_rows.begin());

      const auto left = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      const auto right = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      auto& node = tree.nodes[item.node];
      node.feature = split.feature;
      node.threshold = split.threshold;
      node.left = left;
      node.right = right;
      stack.push_back({right, left_end, item.end, item.depth + 1});
      stack.push_back({left, item.begin, left_end, item.depth + 1});
    }
    return tree;
  }

 private:
  // Candidate features are visited in uniformly random order until mtry
  // non-constant ones have been scored. Features absent from every row of
  // the node are constant, so only the node's own features need shuffling.
  Split find_split(std::span<const std::uint32_t> node_rows, const ClassCounts& counts,
                   Rng& rng) {
    ++stamp_;
    std::vector<std::uint32_t> present;
    for (const auto r : node_rows) {
      for (const auto f : x_.rows[r].indices) {
        if (feature_stamp_[f] != stamp_) {
          feature_stamp_[f] = stamp_;
          present.push_back(f);
        }
      }
    }
    std::sort(present.begin(), present.end());

    Split best;
    std::size_t visited = 0;
    std::size_t drawn = 0;
    std::vector<std::vector<Entry>> buckets;
    while (visited < mtry_ && drawn < present.size()) {
      const std::size_t batch = std::min(mtry_ - visited, present.size() - drawn);
      for (std::size_t b = 0; b < batch; ++b) {
        const std::size_t j = drawn + b + rng.uniform_below(present.size() - drawn - b);
        std::swap(present[drawn + b], present[j]);
        candidate_slot_[present[drawn + b]] = static_cast<std::int32_t>(b);
      }
      buckets.assign(batch, {});
      for (const auto r : node_rows) {
        const auto& row = x_.rows[r];
        for (std::size_t k = 0; k < row.nnz(); ++k) {
          const std::int32_t slot = candidate_slot_[row.indices[k]];
          if (slot >= 0 && row.values[k] > 0.0) {
            buckets[static_cast<std::size_t>(slot)].push_back({row.values[k], r});
          }
        }
      }
      for (std::size_t b = 0; b < batch; ++b) {
        const std::uint32_t f = present[drawn + b];
        candidate_slot_[f] = -1;
        if (score_feature(f, buckets[b], counts, best)) ++visited;
      }
      drawn += batch;
    }
    return best;
  }

  // Scores every threshold of one feature; returns false when the feature is
  // constant on the node.
  bool score_feature(std::uint32_t feature, std::vector<Entry>& entries,
                     const ClassCounts& counts, Split& best) const {
    if (entries.empty()) return false;
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return a.value < b.value || (a.value == b.value && a.row < b.row);
    });
    ClassCounts left = counts;
    for (const auto& e : entries) left[label_index(y_[e.row])] -= weight_[e.row];
    ClassCounts right{};
    for (std::size_t l = 0; l < kNumEmotions; ++l) right[l] = counts[l] - left[l];

    const bool has_zero = total(left) > 0;
    if (!has_zero && entries.front().value == entries.back().value) return false;

    double previous = 0.0;
    for (std::size_t i = 0; i < entries.size();) {
      const double value = entries[i].value;
      if (total(left) > 0 && total(right) > 0) {
        const double score = gini_score(left, right);
        if (score > best.score) {
          double threshold = previous + (value - previous) / 2.0;
          if (threshold >= value) threshold = previous;
          best = {static_cast<std::int32_t>(feature), threshold, score};
        }
      }
      for (; i < entries.size() && entries[i].value == value; ++i) {
        const std::size_t l = label_index(y_[entries[i].row]);
        left[l] += weight_[entries[i].row];
        right[l] -= weight_[entries[i].row];
      }
      previous = value;
    }
    return true;
  }

  const RandomForestConfig& config_;
  const FeatureMatrix& x_;
  std::span<const Emotion> y_;
  std::size_t mtry_;
  std::vector<std::uint32_t> weight_;
  std::vector<std::uint32_t> feature_stamp_;
  std::vector<std::int32_t> candidate_slot_;
  std::uint32_t stamp_ = 0;
};

std::size_t features_per_split(const RandomForestConfig& config, std::size_t width) {
  if (config.features_per_split > 0) return std::min(config.features_per_split, width);
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(width)))));
}

}  // namespace

Emotion forest_vote(std::span<const Emotion> votes) {
  if (votes.empty()) throw Error("forest vote needs at least one tree");
  ClassCounts counts{};
  for (const auto v : votes) ++counts[label_index(v)];
  return majority(counts);
}

RandomForestModel::RandomForestModel(Params params) : params_(std::move(params)) {
  if (params_.trees.empty()) throw Error("random forest has no trees");
}

ClassificationTree RandomForestModel::grow_tree(const RandomForestConfig& config,
                                                const FeatureMatrix& x,
                                                std::span<const Emotion> y,
                                                std::uint64_t seed, std::size_t tree_index) {
  Rng rng = Rng::substream(seed, tree_index);
  TreeGrower grower(config, x, y, features_per_split(config, x.width));
  return grower.grow(rng);
}

RandomForestModel RandomForestModel::fit(const RandomForestConfig& config,
                                         const FeatureMatrix& x, std::span<const Emotion> y,
                                         std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  Params p;
  p.config = config;
  p.width = x.width;
  p.trees.resize(config.n_trees);
  parallel_for(config.n_trees, [&](std::size_t t) {
    p.trees[t] = grow_tree(config, x, y, seed, t);
  });
  return RandomForestModel(std::move(p));
}

std::vector<Emotion> RandomForestModel::tree_votes(const SparseVector& x) const {
  std::vector<Emotion> votes;
  votes.reserve(params_.trees.size());
  for (const auto& tree : params_.trees) votes.push_back(tree.evaluate(x));
  return votes;
}

PredictOutcome RandomForestModel::predict_row(const SparseVector& x) const {
  LabelScores share{};
  const auto votes = tree_votes(x);
  for (const auto v : votes) share[label_index(v)] += 1.0;
  for (double& s : share) s /= static_cast<double>(votes.size());
  PredictOutcome out = outcome_from_scores(share);
  out.label = forest_vote(votes);
  return out;
}

}  // namespace emotext
