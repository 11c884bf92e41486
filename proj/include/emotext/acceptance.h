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

// Acceptance suite shared by `bench verify` and the acceptance test binary.
//
// Criteria 1-6 and 9 need no external data. Criteria 7 and 8 train every
// classifier on a user-supplied ISEAR corpus over seeds 1..5 and are skipped
// when no corpus is given.

#ifndef EMOTEXT_ACCEPTANCE_H_
#define EMOTEXT_ACCEPTANCE_H_

#include <string>
#include <vector>

#include "emotext/corpus.h"
#include "emotext/harness.h"

namespace emotext {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  int id = 0;
  std::string name;
  CheckStatus status = CheckStatus::kSkip;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CheckResult> run_property_checks();

// Criteria 7 and 8; skipped when `isear` is null.
std::vector<CheckResult> run_paper_checks(const Corpus* isear);

// Criteria 7 and 8 evaluated on an existing report (seeds 1..5, defaults).
std::vector<CheckResult> check_paper_report(const BenchmarkReport& report);

// All nine criteria, in order.
std::vector<CheckResult> run_acceptance(const Corpus* isear);

// "PASS  [1] name: detail (0.12 s)"
std::string format_check(const CheckResult& result);

// True when no check failed; skipped checks do not count as failures.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace emotext

#endif  // EMOTEXT_ACCEPTANCE_H_
