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

// Bag-of-words features: vocabulary, count vectors, term frequency and
// TF-IDF with idf(t) = ln(N / df(t)).

#ifndef EMOTEXT_FEATURES_H_
#define EMOTEXT_FEATURES_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emotext/preprocess.h"
#include "emotext/sparse.h"

namespace emotext {

class Vocabulary {
 public:
  Vocabulary() = default;

  // Index of `term`, if present.
  std::optional<std::uint32_t> find(std::string_view term) const;

  // Adds `term` when absent and returns its index.
  std::uint32_t insert(std::string_view term);

  const std::string& term(std::uint32_t index) const { return terms_.at(index); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::string> terms_;
};

// First-occurrence order over the documents. Throws when no document has a
// token.
Vocabulary build_vocabulary(std::span<const TokenizedReview> docs);

// Sorted term indices with positive counts.
struct CountVector {
  std::vector<std::uint32_t> indices;
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const;
  bool operator==(const CountVector&) const = default;
};

// Out-of-vocabulary tokens are ignored.
CountVector count_vector(std::span<const std::string> tokens, const Vocabulary& vocab);
inline CountVector count_vector(const TokenizedReview& doc, const Vocabulary& vocab) {
  return count_vector(doc.tokens, vocab);
}

// count / sum(counts); the empty vector maps to the empty vector.
SparseVector term_frequency(const CountVector& cv);

struct TfIdfModel {
  std::vector<double> idf;
  std::uint64_t n_docs = 0;

  bool operator==(const TfIdfModel&) const = default;
};

// `width` is the vocabulary size. Every term must occur in at least one row.
TfIdfModel fit_idf(std::span<const CountVector> count_rows, std::size_t width);

enum class FeatureScheme { kCount, kTf, kTfIdf };

std::string_view scheme_name(FeatureScheme scheme);
FeatureScheme parse_scheme(std::string_view name);

struct FeatureMatrix {
  FeatureScheme scheme = FeatureScheme::kTfIdf;
  std::size_t width = 0;
  std::vector<SparseVector> rows;

  std::size_t size() const { return rows.size(); }
};

// Row i encodes docs[i]. Exact zeros (idf = 0 terms) are left out of the
// sparse rows.
FeatureMatrix transform(std::span<const TokenizedReview> docs, const Vocabulary& vocab,
                        const TfIdfModel& model, FeatureScheme scheme);

// Vocabulary and IDF table fitted together on one document set.
struct FeatureExtractor {
  Vocabulary vocab;
  TfIdfModel model;

  static FeatureExtractor fit(std::span<const TokenizedReview> docs);

  FeatureMatrix transform(std::span<const TokenizedReview> docs,
                          FeatureScheme scheme) const {
    return emotext::transform(docs, vocab, model, scheme);
  }
};

// One JSON object per line: {"id":..,"scheme":..,"indices":[..],"values":[..]}.
void write_feature_jsonl(std::ostream& out, const FeatureMatrix& matrix,
                         std::span<const std::uint64_t> ids);

}  // namespace emotext

#endif  // EMOTEXT_FEATURES_H_
