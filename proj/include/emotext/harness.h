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

// End-to-end benchmark: load, preprocess, split, featurize, train every
// configured classifier, evaluate, time, rank and render.

#ifndef EMOTEXT_HARNESS_H_
#define EMOTEXT_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotext/classifiers.h"
#include "emotext/corpus.h"
#include "emotext/features.h"
#include "emotext/metrics.h"

namespace emotext {

enum class OutputFormat { kMarkdown, kJson };

std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

struct ExperimentConfig {
  std::string dataset_path;
  std::string stop_word_path;  // empty selects the bundled English list
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> seeds;  // when non-empty, replaces `seed`
  FeatureScheme feature_scheme = FeatureScheme::kTfIdf;
  bool fit_on_all = false;
  bool stratified = false;
  std::size_t folds = 0;  // >= 2 selects k-fold cross-validation
  std::vector<ClassifierKind> classifiers{kAllClassifierKinds.begin(),
                                          kAllClassifierKinds.end()};
  ClassifierConfig classifier_config;
  OutputFormat output_format = OutputFormat::kMarkdown;

  std::vector<std::uint64_t> effective_seeds() const;

  void validate() const;
};

// Sets one option by name. Top-level keys match the CLI flags (`data`,
// `stop-words`, `test-fraction`, `seed`, `seeds`, `scheme`, `fit-on-all`,
// `stratified`, `folds`, `classifiers`, `format`); classifier hyperparameters
// use `<kind>.<name>`, e.g. `knn.k` or `logistic_regression.mode`.
void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value);

// Applies `key = value` lines; blank lines and `#` comments are ignored.
void apply_config_text(ExperimentConfig& config, std::string_view text);
void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path);

// One (seed, fold) evaluation of one classifier.
struct RunRecord {
  std::uint64_t seed = 0;
  std::size_t fold = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t vocabulary_size = 0;
  ConfusionMatrix confusion;
  double train_ms = 0.0;
  double predict_ms = 0.0;

  bool operator==(const RunRecord&) const = default;
};

struct MetricSpread {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;

  bool operator==(const MetricSpread&) const = default;
};

struct ClassifierSummary {
  EvaluationReport mean;  // field-wise mean over the runs
  MetricSpread stdev;     // sample standard deviation, 0 for a single run
  std::vector<RunRecord> runs;

  bool operator==(const ClassifierSummary&) const = default;
};

struct Ranking {
  std::vector<ClassifierKind> order;
  std::vector<ClassifierKind> recommendation;

  bool operator==(const Ranking&) const = default;
};

struct BenchmarkReport {
  std::size_t corpus_size = 0;
  double test_fraction = 0.0;
  std::vector<std::uint64_t> seeds;
  std::size_t folds = 0;
  bool stratified = false;
  FeatureScheme feature_scheme = FeatureScheme::kTfIdf;
  bool fit_on_all = false;
  ClassifierConfig classifier_config;
  std::vector<ClassifierSummary> per_classifier;  // in configured order
  Ranking ranking;
  std::string environment;

  const ClassifierSummary& summary(ClassifierKind kind) const;

  bool operator==(const BenchmarkReport&) const = default;
};

// Descending accuracy, then descending macro-F1, then the fixed kind order.
// The recommendation holds every kind tied with the head on both measures.
Ranking rank_and_recommend(std::span<const EvaluationReport> reports);

BenchmarkReport run_experiment(const ExperimentConfig& config);
BenchmarkReport run_experiment(const Corpus& corpus, const ExperimentConfig& config);

std::string render_report(const BenchmarkReport& report, OutputFormat format);
BenchmarkReport report_from_json(std::string_view text);

// Sets every timing field to 0 so that reports can be compared bytewise.
void zero_timings(BenchmarkReport& report);

// Wall-clock milliseconds spent in `action`, from a monotonic clock.
double measure_time(const std::function<void()>& action);

// Library version, compiler and platform.
std::string environment_description();

}  // namespace emotext

#endif  // EMOTEXT_HARNESS_H_
