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

#include "emotext/features.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "emotext/parallel.h"
#include "json.hpp"

namespace emotext {

std::optional<std::uint32_t> Vocabulary::find(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Vocabulary::insert(std::string_view term) {
  const auto [it, inserted] =
      index_.try_emplace(std::string(term), static_cast<std::uint32_t>(terms_.size()));
  if (inserted) terms_.emplace_back(term);
  return it->second;
}

Vocabulary build_vocabulary(std::span<const TokenizedReview> docs) {
  Vocabulary vocab;
  for (const auto& doc : docs) {
    for (const auto& token : doc.tokens) vocab.insert(token);
  }
  if (vocab.size() == 0) throw Error("vocabulary is empty: every document has no tokens");
  return vocab;
}

std::uint64_t CountVector::total() const {
  std::uint64_t sum = 0;
  for (const auto c : counts) sum += c;
  return sum;
}

CountVector count_vector(std::span<const std::string> tokens, const Vocabulary& vocab) {
  std::map<std::uint32_t, std::uint32_t> counts;
  for (const auto& token : tokens) {
    if (const auto index = vocab.find(token)) ++counts[*index];
  }
  CountVector cv;
  cv.indices.reserve(counts.size());
  cv.counts.reserve(counts.size());
  for (const auto& [index, count] : counts) {
    cv.indices.push_back(index);
    cv.counts.push_back(count);
  }
  return cv;
}

SparseVector term_frequency(const CountVector& cv) {
  SparseVector tf;
  const auto total = static_cast<double>(cv.total());
  for (std::size_t k = 0; k < cv.indices.size(); ++k) {
    tf.push_back(cv.indices[k], static_cast<double>(cv.counts[k]) / total);
  }
  return tf;
}

TfIdfModel fit_idf(std::span<const CountVector> count_rows, std::size_t width) {
  if (count_rows.empty()) throw Error("cannot fit IDF on zero documents");
  std::vector<std::uint64_t> df(width, 0);
  for (const auto& row : count_rows) {
    for (const auto index : row.indices) {
      if (index >= width) throw Error("count vector index exceeds vocabulary width");
      ++df[index];
    }
  }
  TfIdfModel model;
  model.n_docs = count_rows.size();
  model.idf.resize(width);
  const auto n = static_cast<double>(model.n_docs);
  for (std::size_t t = 0; t < width; ++t) {
    if (df[t] == 0) {
      throw Error("term " + std::to_string(t) + " never occurs in the fitting documents");
    }
    model.idf[t] = std::log(n / static_cast<double>(df[t]));
  }
  return model;
}

std::string_view scheme_name(FeatureScheme scheme) {
  switch (scheme) {
    case FeatureScheme::kCount: return "count";
    case FeatureScheme::kTf: return "tf";
    case FeatureScheme::kTfIdf: return "tfidf";
  }
  return "tfidf";
}

FeatureScheme parse_scheme(std::string_view name) {
  if (name == "count") return FeatureScheme::kCount;
  if (name == "tf") return FeatureScheme::kTf;
  if (name == "tfidf") return FeatureScheme::kTfIdf;
  throw Error("unknown feature scheme '" + std::string(name) + "'");
}

FeatureMatrix transform(std::span<const TokenizedReview> docs, const Vocabulary& vocab,
                        const TfIdfModel& model, FeatureScheme scheme) {
  if (model.idf.size() != vocab.size()) {
    throw Error("vocabulary has " + std::to_string(vocab.size()) +
                " terms but the IDF model has " + std::to_string(model.idf.size()));
  }
  FeatureMatrix matrix;
  matrix.scheme = scheme;
  matrix.width = vocab.size();
  matrix.rows.resize(docs.size());
  parallel_for(docs.size(), [&](std::size_t i) {
    const CountVector cv = count_vector(docs[i], vocab);
    SparseVector& row = matrix.rows[i];
    switch (scheme) {
      case FeatureScheme::kCount:
        for (std::size_t k = 0; k < cv.indices.size(); ++k) {
          row.push_back(cv.indices[k], static_cast<double>(cv.counts[k]));
        }
        break;
      case FeatureScheme::kTf:
        row = term_frequency(cv);
        break;
      case FeatureScheme::kTfIdf: {
        const SparseVector tf = term_frequency(cv);
        for (std::size_t k = 0; k < tf.indices.size(); ++k) {
          const double value = tf.values[k] * model.idf[tf.indices[k]];
          if (value != 0.0) row.push_back(tf.indices[k], value);
        }
        break;
      }
    }
  });
  return matrix;
}

FeatureExtractor FeatureExtractor::fit(std::span<const TokenizedReview> docs) {
  FeatureExtractor fx;
  fx.vocab = build_vocabulary(docs);
  std::vector<CountVector> counts;
  counts.reserve(docs.size());
  for (const auto& doc : docs) counts.push_back(count_vector(doc, fx.vocab));
  fx.model = fit_idf(counts, fx.vocab.size());
  return fx;
}

void write_feature_jsonl(std::ostream& out, const FeatureMatrix& matrix,
                         std::span<const std::uint64_t> ids) {
  if (ids.size() != matrix.rows.size()) throw Error("id count does not match row count");
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    nlohmann::ordered_json line;
    line["id"] = ids[i];
    line["scheme"] = scheme_name(matrix.scheme);
    line["indices"] = matrix.rows[i].indices;
    line["values"] = matrix.rows[i].values;
    out << line.dump() << '\n';
  }
}

}  // namespace emotext
