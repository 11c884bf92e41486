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
#include <numeric>

#include "emotext/trees.h"

namespace emotext {
namespace {

constexpr double kMinPrior = 1e-15;
constexpr double kMinGain = 1e-12;

}  // namespace

// Training matrix in column-major form with each column sorted by value.
struct GradientBoostTrainer::Columns {
  ColumnIndex index;

  explicit Columns(const FeatureMatrix& x) : index(x.rows, x.width) {
    std::vector<std::size_t> order;
    for (std::size_t f = 0; f < index.width(); ++f) {
      const std::size_t b = index.begin(f);
      const std::size_t e = index.end(f);
      order.resize(e - b);
      std::iota(order.begin(), order.end(), b);
      std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return index.values[p] < index.values[q] ||
               (index.values[p] == index.values[q] && index.rows[p] < index.rows[q]);
      });
      std::vector<std::uint32_t> rows(order.size());
      std::vector<double> values(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        rows[k] = index.rows[order[k]];
        values[k] = index.values[order[k]];
      }
      std::copy(rows.begin(), rows.end(), index.rows.begin() + static_cast<std::ptrdiff_t>(b));
      std::copy(values.begin(), values.end(),
                index.values.begin() + static_cast<std::ptrdiff_t>(b));
    }
  }
};

GradientBoostModel::GradientBoostModel(Params params) : params_(std::move(params)) {
  if (params_.trees.size() % kNumEmotions != 0) {
    throw Error("boosting model must hold one tree per label per round");
  }
}

LabelScores GradientBoostModel::raw_scores(const SparseVector& x) const {
  LabelScores f = params_.initial;
  for (std::size_t t = 0; t < params_.trees.size(); ++t) {
    f[t % kNumEmotions] += params_.config.shrinkage * params_.trees[t].evaluate(x);
  }
  return f;
}

PredictOutcome GradientBoostModel::predict_row(const SparseVector& x) const {
  return outcome_from_scores(softmax(raw_scores(x)));
}

GradientBoostModel GradientBoostModel::fit(const GradientBoostConfig& config,
                                           const FeatureMatrix& x,
                                           std::span<const Emotion> y) {
  GradientBoostTrainer trainer(x, y, config);
  for (std::size_t m = 0; m < config.rounds; ++m) trainer.run_round();
  return trainer.model();
}

GradientBoostTrainer::GradientBoostTrainer(const FeatureMatrix& x, std::span<const Emotion> y,
                                           const GradientBoostConfig& config)
    : x_(x), y_(y.begin(), y.end()) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  params_.config = config;
  params_.width = x.width;
  std::array<std::size_t, kNumEmotions> counts{};
  for (const auto label : y) ++counts[label_index(label)];
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    const double prior = static_cast<double>(counts[l]) / static_cast<double>(y.size());
    params_.initial[l] = std::log(std::max(prior, kMinPrior));
  }
  scores_.assign(x.size(), params_.initial);
  columns_ = std::make_unique<Columns>(x);
}

GradientBoostTrainer::~GradientBoostTrainer() = default;

std::vector<LabelScores> GradientBoostTrainer::residuals() const {
  std::vector<LabelScores> out(scores_.size());
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    const LabelScores p = softmax(scores_[i]);
    for (std::size_t l = 0; l < kNumEmotions; ++l) {
      out[i][l] = (label_index(y_[i]) == l ? 1.0 : 0.0) - p[l];
    }
  }
  return out;
}

double GradientBoostTrainer::training_loss() const {
  double loss = 0.0;
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    const auto& f = scores_[i];
    const double top = *std::max_element(f.begin(), f.end());
    double sum = 0.0;
    for (const double v : f) sum += std::exp(v - top);
    loss += top + std::log(sum) - f[label_index(y_[i])];
  }
  return loss / static_cast<double>(scores_.size());
}

void GradientBoostTrainer::run_round() {
  const auto r = residuals();
  std::vector<double> targets(r.size());
  std::array<RegressionTree, kNumEmotions> round;
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    for (std::size_t i = 0; i < r.size(); ++i) targets[i] = r[i][l];
    round[l] = fit_tree(targets);
  }
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    for (std::size_t l = 0; l < kNumEmotions; ++l) {
      scores_[i][l] += params_.config.shrinkage * round[l].evaluate(x_.rows[i]);
    }
  }
  for (auto& tree : round) params_.trees.push_back(std::move(tree));
}

// Level-wise exact greedy growth. For each level, every feature column is
// swept once in ascending value order; rows with the feature absent form the
// zero group at the left end of each node's ordering.
RegressionTree GradientBoostTrainer::fit_tree(std::span<const double> targets) const {
  const std::size_t n = targets.size();
  const ColumnIndex& cols = columns_->index;

  RegressionTree tree;
  tree.nodes.emplace_back();
  std::vector<std::int32_t> node_of(n, 0);
  std::vector<std::uint32_t> frontier = {0};

  for (std::size_t depth = 0; depth < params_.config.tree_depth && !frontier.empty(); ++depth) {
    const std::size_t node_count = tree.nodes.size();
    std::vector<double> sum(node_count, 0.0);
    std::vector<std::size_t> count(node_count, 0);
    std::vector<char> active(node_count, 0);
    for (const auto node : frontier) active[node] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto node = static_cast<std::size_t>(node_of[i]);
      if (!active[node]) continue;
      sum[node] += targets[i];
      ++count[node];
    }

    struct Best {
      double gain = kMinGain;
      std::int32_t feature = -1;
      double threshold = 0.0;
    };
    std::vector<Best> best(node_count);
    std::vector<double> nz_sum(node_count, 0.0);
    std::vector<std::size_t> nz_count(node_count, 0);
    std::vector<double> left_sum(node_count, 0.0);
    std::vector<std::size_t> left_count(node_count, 0);
    std::vector<double> previous(node_count, 0.0);
    std::vector<std::uint32_t> touched;

    const auto try_split = [&](std::size_t node, std::uint32_t feature, double value) {
      const std::size_t nl = left_count[node];
      const std::size_t nr = count[node] - nl;
      if (nl == 0 || nr == 0) return;
      const double sl = left_sum[node];
      const double sr = sum[node] - sl;
      const double gain = sl * sl / static_cast<double>(nl) + sr * sr / static_cast<double>(nr) -
                          sum[node] * sum[node] / static_cast<double>(count[node]);
      if (gain > best[node].gain) {
        double threshold = previous[node] + (value - previous[node]) / 2.0;
        if (threshold >= value) threshold = previous[node];
        best[node] = {gain, static_cast<std::int32_t>(feature), threshold};
      }
    };

    for (std::uint32_t f = 0; f < cols.width(); ++f) {
      touched.clear();
      for (std::size_t e = cols.begin(f); e < cols.end(f); ++e) {
        if (cols.values[e] <= 0.0) continue;
        const auto node = static_cast<std::size_t>(node_of[cols.rows[e]]);
        if (!active[node]) continue;
        if (nz_count[node] == 0) touched.push_back(static_cast<std::uint32_t>(node));
        nz_sum[node] += targets[cols.rows[e]];
        ++nz_count[node];
      }
      for (const auto node : touched) {
        left_sum[node] = sum[node] - nz_sum[node];
        left_count[node] = count[node] - nz_count[node];
        previous[node] = 0.0;
      }
      for (std::size_t e = cols.begin(f); e < cols.end(f);) {
        const double value = cols.values[e];
        if (value <= 0.0) {
          ++e;
          continue;
        }
        // Evaluate the boundary before each distinct value, per node.
        std::size_t group_end = e;
        while (group_end < cols.end(f) && cols.values[group_end] == value) ++group_end;
        for (std::size_t g = e; g < group_end; ++g) {
          const auto node = static_cast<std::size_t>(node_of[cols.rows[g]]);
          if (!active[node] || previous[node] == value) continue;
          try_split(node, f, value);
          previous[node] = value;
        }
        for (std::size_t g = e; g < group_end; ++g) {
          const auto node = static_cast<std::size_t>(node_of[cols.rows[g]]);
          if (!active[node]) continue;
          left_sum[node] += targets[cols.rows[g]];
          ++left_count[node];
        }
        e = group_end;
      }
      for (const auto node : touched) {
        nz_sum[node] = 0.0;
        nz_count[node] = 0;
      }
    }

    std::vector<std::uint32_t> next;
    for (const auto node : frontier) {
      if (best[node].feature < 0) continue;
      const auto left = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      auto& split = tree.nodes[node];
      split.feature = best[node].feature;
      split.threshold = best[node].threshold;
      split.left = left;
      split.right = left + 1;
      next.push_back(left);
      next.push_back(left + 1);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& node = tree.nodes[static_cast<std::size_t>(node_of[i])];
      if (node.feature < 0) continue;
      const double v = x_.rows[i].at(static_cast<std::uint32_t>(node.feature));
      node_of[i] = static_cast<std::int32_t>(v <= node.threshold ? node.left : node.right);
    }
    frontier = std::move(next);
  }

  // Newton leaf values for the multinomial deviance.
  const double k = static_cast<double>(kNumEmotions);
  std::vector<double> numerator(tree.nodes.size(), 0.0);
  std::vector<double> denominator(tree.nodes.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto node = static_cast<std::size_t>(node_of[i]);
    const double r = targets[i];
    numerator[node] += r;
    denominator[node] += std::abs(r) * (1.0 - std::abs(r));
  }
  for (std::size_t node = 0; node < tree.nodes.size(); ++node) {
    if (tree.nodes[node].feature >= 0) continue;
    tree.nodes[node].leaf = denominator[node] < 1e-150
                                ? 0.0
                                : (k - 1.0) / k * numerator[node] / denominator[node];
  }
  return tree;
}

}  // namespace emotext
