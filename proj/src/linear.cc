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

#include "emotext/linear.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emotext/random.h"

namespace emotext {
namespace {

// Presentation order of the training rows. Reshuffled (in place, continuing
// from the previous permutation) at the start of every epoch.
class EpochOrder {
 public:
  EpochOrder(std::size_t n, std::uint64_t seed) : order_(n), rng_(seed) {
    std::iota(order_.begin(), order_.end(), 0);
  }
  const std::vector<std::size_t>& next_epoch() {
    rng_.shuffle(std::span<std::size_t>(order_));
    return order_;
  }

 private:
  std::vector<std::size_t> order_;
  Rng rng_;
};

void axpy(double alpha, const SparseVector& x, std::span<double> y) {
  for (std::size_t k = 0; k < x.nnz(); ++k) y[x.indices[k]] += alpha * x.values[k];
}

// Weight vector stored as scale * w so the L2 shrink is O(1) per step.
struct ScaledWeights {
  std::vector<double> w;
  double scale = 1.0;

  explicit ScaledWeights(std::size_t width) : w(width, 0.0) {}

  double dot(const SparseVector& x) const { return scale * x.dot(w); }

  void shrink(double factor) {
    scale *= factor;
    if (scale < 1e-9) {
      for (double& v : w) v *= scale;
      scale = 1.0;
    }
  }

  void add(double alpha, const SparseVector& x) { axpy(alpha / scale, x, w); }

  void export_to(std::span<double> out) const {
    for (std::size_t j = 0; j < w.size(); ++j) out[j] = scale * w[j];
  }
};

std::span<double> label_row(std::vector<double>& weights, std::size_t label,
                            std::size_t width) {
  return {weights.data() + label * width, width};
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void lr_update(double& bias, std::span<double> weights, const SparseVector& x,
               double target, double rate) {
  const double p = sigmoid(bias + x.dot(weights));
  const double step = rate * (target - p) * p * (1.0 - p);
  axpy(step, x, weights);
  bias += step;
}

void hinge_step(double& bias, std::span<double> weights, const SparseVector& x,
                int label, double eta, double lambda) {
  const double y = label > 0 ? 1.0 : -1.0;
  const double margin = y * (bias + x.dot(weights));
  const double shrink = 1.0 - eta * lambda;
  for (double& w : weights) w *= shrink;
  if (margin < 1.0) {
    axpy(eta * y, x, weights);
    bias += eta * y;
  }
}

std::vector<double> softmax_scores(std::span<const double> activations) {
  double top = 0.0;  // reference activation
  for (const double z : activations) top = std::max(top, z);
  std::vector<double> out(activations.size() + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k < activations.size(); ++k) {
    out[k] = std::exp(activations[k] - top);
    sum += out[k];
  }
  out.back() = std::exp(-top);
  sum += out.back();
  for (double& p : out) p /= sum;
  return out;
}

LinearModel::LinearModel(Params params) : params_(std::move(params)) {
  if (params_.weights.size() != kNumEmotions * params_.width) {
    throw Error("linear model weight table has the wrong size");
  }
}

LinearModel LinearModel::fit_logistic(const LogisticConfig& config, const FeatureMatrix& x,
                                      std::span<const Emotion> y, std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  Params p;
  p.kind = ClassifierKind::kLogisticRegression;
  p.output = Output::kNormalizedSigmoid;
  p.width = x.width;
  p.weights.assign(kNumEmotions * x.width, 0.0);

  EpochOrder order(x.size(), seed);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (const std::size_t i : order.next_epoch()) {
      for (std::size_t l = 0; l < kNumEmotions; ++l) {
        const double target = label_index(y[i]) == l ? 1.0 : 0.0;
        lr_update(p.bias[l], label_row(p.weights, l, x.width), x.rows[i], target,
                  config.learning_rate);
      }
    }
  }
  return LinearModel(std::move(p));
}

LinearModel LinearModel::fit_svm(const LinearSvmConfig& config, const FeatureMatrix& x,
                                 std::span<const Emotion> y, std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  std::vector<ScaledWeights> w(kNumEmotions, ScaledWeights(x.width));
  LabelScores bias{};

  EpochOrder order(x.size(), seed);
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (const std::size_t i : order.next_epoch()) {
      ++t;
      const double eta = config.learning_rate /
                         (1.0 + config.learning_rate * config.lambda * static_cast<double>(t));
      const SparseVector& row = x.rows[i];
      for (std::size_t l = 0; l < kNumEmotions; ++l) {
        const double sign = label_index(y[i]) == l ? 1.0 : -1.0;
        const double margin = sign * (bias[l] + w[l].dot(row));
        w[l].shrink(1.0 - eta * config.lambda);
        if (margin < 1.0) {
          w[l].add(eta * sign, row);
          bias[l] += eta * sign;
        }
      }
    }
  }

  Params p;
  p.kind = ClassifierKind::kLinearSvm;
  p.output = Output::kRaw;
  p.width = x.width;
  p.bias = bias;
  p.weights.assign(kNumEmotions * x.width, 0.0);
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    w[l].export_to(label_row(p.weights, l, x.width));
  }
  return LinearModel(std::move(p));
}

LinearModel LinearModel::fit_sgd(const SgdConfig& config, const FeatureMatrix& x,
                                 std::span<const Emotion> y, std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  Params p;
  p.kind = ClassifierKind::kSgdLinear;
  p.output = Output::kRaw;
  p.width = x.width;
  p.weights.assign(kNumEmotions * x.width, 0.0);

  EpochOrder order(x.size(), seed);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double eta =
        config.learning_rate / (1.0 + config.decay * static_cast<double>(epoch));
    for (const std::size_t i : order.next_epoch()) {
      const SparseVector& row = x.rows[i];
      for (std::size_t l = 0; l < kNumEmotions; ++l) {
        const auto weights = label_row(p.weights, l, x.width);
        const bool positive = label_index(y[i]) == l;
        const double z = p.bias[l] + row.dot(weights);
        double step = 0.0;
        if (config.loss == SgdLoss::kHinge) {
          const double sign = positive ? 1.0 : -1.0;
          if (sign * z < 1.0) step = eta * sign;
        } else {
          step = eta * ((positive ? 1.0 : 0.0) - sigmoid(z));
        }
        if (step != 0.0) {
          axpy(step, row, weights);
          p.bias[l] += step;
        }
      }
    }
  }
  return LinearModel(std::move(p));
}

LabelScores LinearModel::decision_values(const SparseVector& x) const {
  LabelScores z{};
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    z[l] = params_.bias[l] +
           x.dot(std::span<const double>(params_.weights.data() + l * params_.width,
                                         params_.width));
  }
  return z;
}

PredictOutcome LinearModel::predict_row(const SparseVector& x) const {
  LabelScores scores = decision_values(x);
  if (params_.output == Output::kNormalizedSigmoid) {
    double sum = 0.0;
    for (double& s : scores) {
      s = sigmoid(s);
      sum += s;
    }
    for (double& s : scores) s /= sum;
  }
  return outcome_from_scores(scores);
}

SoftmaxRegressionModel::SoftmaxRegressionModel(Params params) : params_(std::move(params)) {
  if (params_.weights.size() != kFreeLabels * params_.width) {
    throw Error("softmax model weight table has the wrong size");
  }
}

SoftmaxRegressionModel SoftmaxRegressionModel::fit(const LogisticConfig& config,
                                                   const FeatureMatrix& x,
                                                   std::span<const Emotion> y,
                                                   std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  Params p;
  p.width = x.width;
  p.weights.assign(kFreeLabels * x.width, 0.0);
  SoftmaxRegressionModel model(std::move(p));
  Params& q = model.params_;

  EpochOrder order(x.size(), seed);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (const std::size_t i : order.next_epoch()) {
      const LabelScores prob = model.probabilities(x.rows[i]);
      for (std::size_t k = 0; k < kFreeLabels; ++k) {
        const double target = label_index(y[i]) == k ? 1.0 : 0.0;
        const double step = config.learning_rate * (target - prob[k]);
        axpy(step, x.rows[i], label_row(q.weights, k, x.width));
        q.bias[k] += step;
      }
    }
  }
  return model;
}

LabelScores SoftmaxRegressionModel::probabilities(const SparseVector& x) const {
  std::array<double, kFreeLabels> z{};
  for (std::size_t k = 0; k < kFreeLabels; ++k) {
    z[k] = params_.bias[k] +
           x.dot(std::span<const double>(params_.weights.data() + k * params_.width,
                                         params_.width));
  }
  const auto p = softmax_scores(z);
  LabelScores out{};
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

PredictOutcome SoftmaxRegressionModel::predict_row(const SparseVector& x) const {
  return outcome_from_scores(probabilities(x));
}

}  // namespace emotext
