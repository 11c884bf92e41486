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

#ifndef EMOTEXT_RANDOM_H_
#define EMOTEXT_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace emotext {

// Reproducible random stream.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not, so bounded integers and unit
// reals are derived here directly from the raw 64-bit output. Sub-streams are
// keyed by mixing (seed, key) through SplitMix64, which lets independent work
// items (forest trees, experiment seeds) draw from streams that do not depend
// on scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream identified by (seed, key).
  static Rng substream(std::uint64_t seed, std::uint64_t key);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 random bits.
  double uniform_unit();

  // Uniform real in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform_unit();
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace emotext

#endif  // EMOTEXT_RANDOM_H_
