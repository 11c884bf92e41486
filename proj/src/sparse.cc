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

#include "emotext/sparse.h"

#include <algorithm>

#include "emotext/labels.h"

namespace emotext {

double SparseVector::at(std::uint32_t index) const {
  const auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) return 0.0;
  return values[static_cast<std::size_t>(it - indices.begin())];
}

std::vector<double> SparseVector::to_dense(std::size_t width) const {
  if (min_width() > width) throw Error("sparse vector wider than requested width");
  std::vector<double> out(width, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) out[indices[k]] = values[k];
  return out;
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.push_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  return out;
}

ColumnIndex::ColumnIndex(std::span<const SparseVector> matrix_rows, std::size_t width)
    : offsets(width + 1, 0) {
  for (const auto& row : matrix_rows) {
    for (const auto f : row.indices) {
      if (f >= width) throw Error("feature index out of range");
      ++offsets[f + 1];
    }
  }
  for (std::size_t f = 0; f < width; ++f) offsets[f + 1] += offsets[f];
  rows.resize(offsets.back());
  values.resize(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t r = 0; r < matrix_rows.size(); ++r) {
    const auto& row = matrix_rows[r];
    for (std::size_t k = 0; k < row.indices.size(); ++k) {
      const std::size_t slot = cursor[row.indices[k]]++;
      rows[slot] = static_cast<std::uint32_t>(r);
      values[slot] = row.values[k];
    }
  }
}

}  // namespace emotext
