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

#include "emotext/bpn.h"

#include <cmath>
#include <numeric>

#include "emotext/linear.h"
#include "emotext/random.h"

namespace emotext {
namespace {

struct Deltas {
  LabelScores output{};        // dL/dz2
  std::vector<double> hidden;  // dL/dz1
};

Deltas compute_deltas(const BpnParams& p, const BpnActivations& a, const LabelScores& target) {
  Deltas d;
  for (std::size_t k = 0; k < kNumEmotions; ++k) d.output[k] = a.output[k] - target[k];
  d.hidden.assign(p.hidden, 0.0);
  for (std::size_t h = 0; h < p.hidden; ++h) {
    double back = 0.0;
    for (std::size_t k = 0; k < kNumEmotions; ++k) back += d.output[k] * p.w2[k * p.hidden + h];
    d.hidden[h] = back * a.hidden[h] * (1.0 - a.hidden[h]);
  }
  return d;
}

}  // namespace

BpnParams BpnParams::zeros(std::size_t width, std::size_t hidden) {
  BpnParams p;
  p.width = width;
  p.hidden = hidden;
  p.config.hidden_units = hidden;
  p.w1.assign(width * hidden, 0.0);
  p.b1.assign(hidden, 0.0);
  p.w2.assign(kNumEmotions * hidden, 0.0);
  return p;
}

void BpnParams::check_shape() const {
  if (hidden == 0 || w1.size() != width * hidden || b1.size() != hidden ||
      w2.size() != kNumEmotions * hidden) {
    throw Error("network parameter arrays do not match the declared shape");
  }
}

BpnActivations bpn_forward(const BpnParams& p, const SparseVector& x) {
  if (x.min_width() > p.width) throw Error("input row is wider than the network");
  BpnActivations a;
  a.hidden = p.b1;
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    const double v = x.values[k];
    const double* row = p.w1.data() + static_cast<std::size_t>(x.indices[k]) * p.hidden;
    for (std::size_t h = 0; h < p.hidden; ++h) a.hidden[h] += v * row[h];
  }
  for (double& z : a.hidden) z = sigmoid(z);
  LabelScores z2 = p.b2;
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    const double* row = p.w2.data() + k * p.hidden;
    for (std::size_t h = 0; h < p.hidden; ++h) z2[k] += row[h] * a.hidden[h];
  }
  a.output = softmax(z2);
  return a;
}

double bpn_loss(const BpnParams& p, const SparseVector& x, const LabelScores& target) {
  const auto a = bpn_forward(p, x);
  double loss = 0.0;
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    if (target[k] != 0.0) loss -= target[k] * std::log(a.output[k]);
  }
  return loss;
}

BpnParams bpn_gradients(const BpnParams& p, const SparseVector& x, const LabelScores& target) {
  const auto a = bpn_forward(p, x);
  const auto d = compute_deltas(p, a, target);
  BpnParams g = BpnParams::zeros(p.width, p.hidden);
  g.config = p.config;
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    double* row = g.w1.data() + static_cast<std::size_t>(x.indices[k]) * p.hidden;
    for (std::size_t h = 0; h < p.hidden; ++h) row[h] = x.values[k] * d.hidden[h];
  }
  g.b1 = d.hidden;
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    for (std::size_t h = 0; h < p.hidden; ++h) {
      g.w2[k * p.hidden + h] = d.output[k] * a.hidden[h];
    }
  }
  g.b2 = d.output;
  return g;
}

void bpn_backward(BpnParams& p, const SparseVector& x, const LabelScores& target,
                  double learning_rate) {
  const auto a = bpn_forward(p, x);
  const auto d = compute_deltas(p, a, target);
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    double* row = p.w1.data() + static_cast<std::size_t>(x.indices[k]) * p.hidden;
    const double step = learning_rate * x.values[k];
    for (std::size_t h = 0; h < p.hidden; ++h) row[h] -= step * d.hidden[h];
  }
  for (std::size_t h = 0; h < p.hidden; ++h) p.b1[h] -= learning_rate * d.hidden[h];
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    double* row = p.w2.data() + k * p.hidden;
    for (std::size_t h = 0; h < p.hidden; ++h) {
      row[h] -= learning_rate * d.output[k] * a.hidden[h];
    }
    p.b2[k] -= learning_rate * d.output[k];
  }
}

LabelScores one_hot(Emotion label) {
  LabelScores t{};
  t[label_index(label)] = 1.0;
  return t;
}

BpnModel::BpnModel(BpnParams params) : params_(std::move(params)) { params_.check_shape(); }

BpnModel BpnModel::fit(const BpnConfig& config, const FeatureMatrix& x,
                       std::span<const Emotion> y, std::uint64_t seed) {
  detail::check_training_set(x, y, /*needs_two_labels=*/true);
  BpnParams p = BpnParams::zeros(x.width, config.hidden_units);
  p.config = config;

  Rng rng(seed);
  const double k = static_cast<double>(kNumEmotions);
  const double h = static_cast<double>(config.hidden_units);
  const double limit1 = std::sqrt(6.0 / (static_cast<double>(x.width) + h));
  const double limit2 = std::sqrt(6.0 / (h + k));
  for (double& w : p.w1) w = rng.uniform(-limit1, limit1);
  for (double& w : p.w2) w = rng.uniform(-limit2, limit2);

  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (const auto i : order) bpn_backward(p, x.rows[i], one_hot(y[i]), config.learning_rate);
  }
  return BpnModel(std::move(p));
}

PredictOutcome BpnModel::predict_row(const SparseVector& x) const {
  return outcome_from_scores(bpn_forward(params_, x).output);
}

}  // namespace emotext
