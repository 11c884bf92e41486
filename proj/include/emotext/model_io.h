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

// Versioned JSON encoding of fitted models.
//
//   {"format": "emotext-model", "version": 1, "kind": "knn",
//    "labels": ["joy", ...], "width": V, "config": {...}, "parameters": {...}}
//
// Weight tables are written as {"indices": [...], "values": [...]} over their
// nonzero entries; -inf log-priors are written as null. Loading a saved model
// yields a model whose predictions are bit-identical to the original.

#ifndef EMOTEXT_MODEL_IO_H_
#define EMOTEXT_MODEL_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "emotext/classifiers.h"

namespace emotext {

inline constexpr int kModelFormatVersion = 1;

std::string model_to_json(const TrainedModel& model);
std::unique_ptr<TrainedModel> model_from_json(std::string_view text);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
std::unique_ptr<TrainedModel> load_model(const std::filesystem::path& path);

// The block of `config` used by `kind`, as a JSON object.
std::string config_to_json(ClassifierKind kind, const ClassifierConfig& config);

// Overwrites the `kind` block of `config` with the keys present in `text`.
void config_from_json(ClassifierKind kind, std::string_view text, ClassifierConfig& config);

}  // namespace emotext

#endif  // EMOTEXT_MODEL_IO_H_
