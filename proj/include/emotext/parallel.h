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

#ifndef EMOTEXT_PARALLEL_H_
#define EMOTEXT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace emotext {

// Worker cap for internal parallel loops. Defaults to the BENCH_THREADS
// environment variable when set, otherwise the hardware concurrency.
std::size_t max_threads();
void set_max_threads(std::size_t n);

// Calls body(i) for every i in [0, n). Work items must write only to their
// own slot; results therefore never depend on the worker count. The first
// exception thrown by any item is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace emotext

#endif  // EMOTEXT_PARALLEL_H_
