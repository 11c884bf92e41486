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

#include "emotext/labels.h"

#include <algorithm>
#include <cctype>

namespace emotext {
namespace {

constexpr std::array<std::string_view, kNumEmotions> kNames = {
    "joy", "fear", "sadness", "shame", "guilt"};
constexpr std::array<std::string_view, kNumEmotions> kDisplayNames = {
    "Joy", "Fear", "Sadness", "Shame", "Guilt"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view label_name(Emotion e) { return kNames.at(label_index(e)); }

std::string_view label_display_name(Emotion e) {
  return kDisplayNames.at(label_index(e));
}

std::optional<Emotion> parse_label(std::string_view text) {
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    if (iequals(text, kNames[i])) return label_at(i);
  }
  return std::nullopt;
}

std::size_t argmax_label(const LabelScores& scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace emotext
