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

// Feed-forward network with one sigmoid hidden layer and a softmax output,
// trained by per-example back-propagation of the cross-entropy loss.

#ifndef EMOTEXT_BPN_H_
#define EMOTEXT_BPN_H_

#include <vector>

#include "emotext/classifiers.h"

namespace emotext {

struct BpnParams {
  BpnConfig config;
  std::size_t width = 0;
  std::size_t hidden = 0;
  std::vector<double> w1;  // input->hidden, [feature * hidden + unit]
  std::vector<double> b1;  // hidden
  std::vector<double> w2;  // hidden->output, [label * hidden + unit]
  LabelScores b2{};

  // All-zero parameters of the given shape.
  static BpnParams zeros(std::size_t width, std::size_t hidden);

  // Throws unless the array sizes agree with width and hidden.
  void check_shape() const;

  bool operator==(const BpnParams&) const = default;
};

struct BpnActivations {
  std::vector<double> hidden;  // sigmoid(W1 x + b1)
  LabelScores output{};        // softmax(W2 hidden + b2)
};

BpnActivations bpn_forward(const BpnParams& params, const SparseVector& x);

// Cross-entropy -sum_k target_k log output_k. `target` must sum to 1.
double bpn_loss(const BpnParams& params, const SparseVector& x, const LabelScores& target);

// Dense gradient of bpn_loss with respect to every parameter, laid out like
// BpnParams. Meant for checks; training uses bpn_backward.
BpnParams bpn_gradients(const BpnParams& params, const SparseVector& x,
                        const LabelScores& target);

// One gradient-descent step of bpn_loss on (x, target), touching only the
// W1 rows of features present in x.
void bpn_backward(BpnParams& params, const SparseVector& x, const LabelScores& target,
                  double learning_rate);

LabelScores one_hot(Emotion label);

class BpnModel final : public TrainedModel {
 public:
  explicit BpnModel(BpnParams params);

  // Xavier-uniform initialization and per-epoch shuffling, both drawn from
  // Rng(seed).
  static BpnModel fit(const BpnConfig& config, const FeatureMatrix& x,
                      std::span<const Emotion> y, std::uint64_t seed);

  ClassifierKind kind() const override { return ClassifierKind::kBpn; }
  std::size_t width() const override { return params_.width; }
  const BpnParams& params() const { return params_; }

 protected:
  PredictOutcome predict_row(const SparseVector& x) const override;

 private:
  BpnParams params_;
};

}  // namespace emotext

#endif  // EMOTEXT_BPN_H_
