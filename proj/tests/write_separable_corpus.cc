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

// Writes the synthetic separable corpus as a canonical CSV.
//
//   write_separable_corpus OUT [DOCS_PER_LABEL] [SEED]

#include <cstdint>
#include <iostream>
#include <string>

#include "emotext/corpus.h"
#include "emotext/synthetic.h"

int main(int argc, char** argv) {
  if (argc < 2 || argc > 4) {
    std::cerr << "usage: write_separable_corpus OUT [DOCS_PER_LABEL] [SEED]\n";
    return 2;
  }
  const std::size_t per_label = argc > 2 ? std::stoul(argv[2]) : 30;
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 9;
  emotext::save_corpus(argv[1], emotext::make_separable_corpus(per_label, seed));
  return 0;
}
