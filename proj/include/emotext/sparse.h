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

#ifndef EMOTEXT_SPARSE_H_
#define EMOTEXT_SPARSE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace emotext {

// Sparse real vector with strictly increasing indices.
struct SparseVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t nnz() const { return indices.size(); }
  bool empty() const { return indices.empty(); }

  void push_back(std::uint32_t index, double value) {
    indices.push_back(index);
    values.push_back(value);
  }

  // Value at `index`, 0 when absent.
  double at(std::uint32_t index) const;

  double dot(std::span<const double> dense) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < indices.size(); ++k) sum += values[k] * dense[indices[k]];
    return sum;
  }

  double squared_norm() const {
    double sum = 0.0;
    for (const double v : values) sum += v * v;
    return sum;
  }

  // Largest index + 1 (0 when empty).
  std::size_t min_width() const { return indices.empty() ? 0 : indices.back() + 1; }

  std::vector<double> to_dense(std::size_t width) const;
  static SparseVector from_dense(std::span<const double> dense);

  bool operator==(const SparseVector&) const = default;
};

// Column-major view of a set of rows: for every feature, the rows where it is
// nonzero together with the value, in increasing row order.
struct ColumnIndex {
  std::vector<std::size_t> offsets;  // size width + 1
  std::vector<std::uint32_t> rows;
  std::vector<double> values;

  ColumnIndex(std::span<const SparseVector> matrix_rows, std::size_t width);

  std::size_t width() const { return offsets.size() - 1; }
  std::size_t begin(std::size_t feature) const { return offsets[feature]; }
  std::size_t end(std::size_t feature) const { return offsets[feature + 1]; }
};

}  // namespace emotext

#endif  // EMOTEXT_SPARSE_H_
