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

// Acceptance runner: one PASS/FAIL/SKIP line per criterion. Criteria 7 and 8
// run when ISEAR_CSV names a canonical corpus file.

#include <cstdlib>
#include <iostream>
#include <optional>

#include "emotext/acceptance.h"
#include "emotext/corpus.h"

int main() {
  std::optional<emotext::Corpus> isear;
  if (const char* path = std::getenv("ISEAR_CSV"); path != nullptr && *path != '\0') {
    try {
      isear = emotext::load_corpus(path);
    } catch (const std::exception& e) {
      std::cerr << "acceptance: " << e.what() << "\n";
      return 2;
    }
  }
  const auto results = emotext::run_acceptance(isear ? &*isear : nullptr);
  for (const auto& r : results) std::cout << emotext::format_check(r) << "\n";
  return emotext::all_passed(results) ? 0 : 1;
}
