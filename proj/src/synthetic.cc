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

#include "emotext/synthetic.h"

#include <string>

#include "emotext/random.h"

namespace emotext {
namespace {

using WordSet = std::array<std::string_view, 8>;

constexpr std::array<WordSet, kNumEmotions> kWords = {{
    {"sunshine", "laughed", "celebrate", "delighted", "party", "wonderful", "hug", "cheerful"},
    {"dark", "scream", "trembling", "spider", "panic", "danger", "froze", "nightmare"},
    {"funeral", "tears", "lonely", "grief", "mourned", "empty", "farewell", "loss"},
    {"embarrassed", "blushed", "humiliated", "mocked", "awkward", "exposed", "ridiculed",
     "stammered"},
    {"apologized", "regret", "stole", "blamed", "conscience", "lied", "betrayed", "sorry"},
}};

}  // namespace

std::span<const std::string_view> separable_vocabulary(Emotion label) {
  return kWords[label_index(label)];
}

Corpus make_separable_corpus(std::size_t docs_per_label, std::uint64_t seed) {
  if (docs_per_label == 0) throw Error("separable corpus needs at least one document per label");
  Rng rng(seed);
  std::vector<std::pair<Emotion, std::string>> rows;
  rows.reserve(docs_per_label * kNumEmotions);
  for (std::size_t d = 0; d < docs_per_label; ++d) {
    for (const auto label : kAllEmotions) {
      const auto& words = kWords[label_index(label)];
      const std::size_t length = 5 + rng.uniform_below(6);
      std::string text;
      for (std::size_t w = 0; w < length; ++w) {
        if (w > 0) text += ' ';
        text += words[rng.uniform_below(words.size())];
      }
      rows.emplace_back(label, std::move(text));
    }
  }
  return Corpus::from_pairs(rows);
}

}  // namespace emotext
