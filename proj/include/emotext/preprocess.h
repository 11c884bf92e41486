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

// Text normalization: whitespace tokenization, lowercasing, edge punctuation
// stripping and stop-word removal. Character classes follow Unicode
// (White_Space property, general category P*).

#ifndef EMOTEXT_PREPROCESS_H_
#define EMOTEXT_PREPROCESS_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "emotext/corpus.h"

namespace emotext {

// Set of lowercase, punctuation-free tokens. Entries are lowercased and
// edge-stripped on construction; an entry that still contains punctuation or
// an empty list is rejected.
class StopWordList {
 public:
  explicit StopWordList(std::span<const std::string> words);

  // The bundled English list (data/stopwords_en.txt).
  static const StopWordList& default_english();

  bool contains(std::string_view token) const {
    return words_.contains(std::string(token));
  }
  std::size_t size() const { return words_.size(); }
  std::vector<std::string> sorted_words() const;

 private:
  std::unordered_set<std::string> words_;
};

// One token per line; everything after '#' is a comment.
StopWordList parse_stop_words(std::string_view text);
StopWordList load_stop_words(const std::filesystem::path& path);

struct TokenizedReview {
  std::uint64_t id = 0;
  std::vector<std::string> tokens;
  Emotion label = Emotion::kJoy;

  bool operator==(const TokenizedReview&) const = default;
};

// Splits on runs of Unicode whitespace and lowercases every token.
std::vector<std::string> tokenize(std::string_view text);

// Removes leading and trailing punctuation code points; interior
// punctuation ("one's", "end-of-term") is kept.
std::string strip_punctuation(std::string_view token);

std::vector<std::string> remove_stop_words(std::span<const std::string> tokens,
                                           const StopWordList& stop);

// tokenize -> strip_punctuation (dropping emptied tokens) -> remove_stop_words.
std::vector<std::string> preprocess_text(std::string_view text,
                                         const StopWordList& stop);

// One TokenizedReview per review, in corpus order. Reviews left with no
// tokens are kept so row indices stay aligned with the corpus.
std::vector<TokenizedReview> preprocess_corpus(const Corpus& corpus,
                                               const StopWordList& stop);

}  // namespace emotext

#endif  // EMOTEXT_PREPROCESS_H_
