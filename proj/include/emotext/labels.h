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

#ifndef EMOTEXT_LABELS_H_
#define EMOTEXT_LABELS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace emotext {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The five emotion categories. The enumerator order is the fixed label order
// used for every tie-break, matrix row/column and score vector.
enum class Emotion : int { kJoy = 0, kFear, kSadness, kShame, kGuilt };

inline constexpr std::size_t kNumEmotions = 5;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::kJoy, Emotion::kFear, Emotion::kSadness, Emotion::kShame,
    Emotion::kGuilt};

// Per-label real values indexed by label_index().
using LabelScores = std::array<double, kNumEmotions>;

constexpr std::size_t label_index(Emotion e) {
  return static_cast<std::size_t>(e);
}

constexpr Emotion label_at(std::size_t i) { return kAllEmotions.at(i); }

// Lowercase name used in the canonical CSV ("joy", "fear", ...).
std::string_view label_name(Emotion e);

// Capitalized name used in reports ("Joy", "Fear", ...).
std::string_view label_display_name(Emotion e);

// Case-insensitive parse; std::nullopt for anything outside the five labels.
std::optional<Emotion> parse_label(std::string_view text);

// Index of the largest score; equal scores resolve to the earliest label.
std::size_t argmax_label(const LabelScores& scores);

}  // namespace emotext

#endif  // EMOTEXT_LABELS_H_
