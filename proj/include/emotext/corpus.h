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

// Labeled emotion corpus: loading, ISEAR conversion and train/test splits.
//
// Canonical file format: UTF-8 CSV with header `label,text`, lowercase labels
// and RFC-4180 quoting.

#ifndef EMOTEXT_CORPUS_H_
#define EMOTEXT_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emotext/labels.h"

namespace emotext {

struct Review {
  std::uint64_t id = 0;
  std::string text;
  Emotion label = Emotion::kJoy;

  bool operator==(const Review&) const = default;
};

// Non-empty, strictly increasing ids, non-blank texts. Enforced on
// construction.
class Corpus {
 public:
  explicit Corpus(std::vector<Review> reviews);

  // Builds a corpus with ids 0..N-1 in the given order.
  static Corpus from_pairs(
      const std::vector<std::pair<Emotion, std::string>>& rows);

  const std::vector<Review>& reviews() const { return reviews_; }
  std::size_t size() const { return reviews_.size(); }
  const Review& operator[](std::size_t i) const { return reviews_[i]; }

  std::vector<Emotion> labels() const;

 private:
  std::vector<Review> reviews_;
};

Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view csv_text);
void write_corpus(std::ostream& out, const Corpus& corpus);
void save_corpus(const std::filesystem::path& path, const Corpus& corpus);

// Converts a raw ISEAR export (delimiter '|', ',' or TAB, detected from the
// first line) into the canonical CSV, keeping only the five in-scope labels.
// Returns the number of rows written.
std::size_t convert_isear(const std::filesystem::path& raw_path,
                          const std::filesystem::path& out_path);

// Conversion core used by convert_isear; exposed for in-memory use.
Corpus convert_isear_text(std::string_view raw_text);

using LabelHistogram = std::array<std::size_t, kNumEmotions>;

LabelHistogram label_histogram(const Corpus& corpus);

struct SplitPlan {
  std::uint64_t seed = 0;
  double test_fraction = 0.2;
  std::vector<std::size_t> train_indices;  // ascending
  std::vector<std::size_t> test_indices;   // ascending

  bool operator==(const SplitPlan&) const = default;
};

// round-half-up(test_fraction * n), clamped to [1, n - 1].
std::size_t test_set_size(std::size_t n, double test_fraction);

// Uniform sampling without replacement of the test indices.
SplitPlan split(std::size_t n, double test_fraction, std::uint64_t seed);
SplitPlan split(const Corpus& corpus, double test_fraction, std::uint64_t seed);

// Per-label sampling: each label contributes test_set_size(n_label, fraction)
// test rows (labels with a single row stay in training).
SplitPlan stratified_split(const std::vector<Emotion>& labels,
                           double test_fraction, std::uint64_t seed);

// k folds whose test sets partition [0, n). Fold sizes differ by at most 1.
std::vector<SplitPlan> kfold_split(std::size_t n, std::size_t folds,
                                   std::uint64_t seed);

}  // namespace emotext

#endif  // EMOTEXT_CORPUS_H_
