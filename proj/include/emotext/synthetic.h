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

#ifndef EMOTEXT_SYNTHETIC_H_
#define EMOTEXT_SYNTHETIC_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "emotext/corpus.h"

namespace emotext {

// The eight words reserved for `label` in the separable corpus. The five
// word sets are pairwise disjoint and contain no default stop words.
std::span<const std::string_view> separable_vocabulary(Emotion label);

// Linearly separable corpus: every document draws 5 to 10 words from its own
// label's vocabulary. Labels cycle Joy, Fear, ... so any prefix is balanced.
Corpus make_separable_corpus(std::size_t docs_per_label, std::uint64_t seed);

}  // namespace emotext

#endif  // EMOTEXT_SYNTHETIC_H_
