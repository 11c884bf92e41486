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

#include "emotext/harness.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "emotext/synthetic.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace emotext {
namespace {

std::size_t CountOccurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

// Tables are maximal runs of lines starting with '|'.
std::size_t CountTables(const std::string& markdown) {
  std::size_t tables = 0;
  bool inside = false;
  std::istringstream in(markdown);
  std::string line;
  while (std::getline(in, line)) {
    const bool row = !line.empty() && line[0] == '|';
    if (row && !inside) ++tables;
    inside = row;
  }
  return tables;
}

EvaluationReport Entry(ClassifierKind kind, double accuracy, double f1) {
  EvaluationReport r;
  r.classifier = kind;
  r.accuracy = accuracy;
  r.macro_f1 = f1;
  return r;
}

ExperimentConfig SmallExperiment() {
  ExperimentConfig config;
  config.classifiers = {ClassifierKind::kNaiveBayes};
  config.seed = 3;
  return config;
}

TEST(HarnessTest, SingleClassifierTinyCorpus) {
  const Corpus corpus = make_separable_corpus(4, 1);
  ASSERT_EQ(corpus.size(), 20u);
  const BenchmarkReport report = run_experiment(corpus, SmallExperiment());
  ASSERT_EQ(report.per_classifier.size(), 1u);
  const auto& s = report.summary(ClassifierKind::kNaiveBayes);
  ASSERT_EQ(s.runs.size(), 1u);
  EXPECT_EQ(s.runs[0].test_size, 4u);
  EXPECT_EQ(s.runs[0].train_size, 16u);
  EXPECT_EQ(s.runs[0].confusion.total(), s.runs[0].test_size);
  EXPECT_EQ(s.mean.accuracy, accuracy(s.runs[0].confusion));
  EXPECT_GE(s.mean.cpu_time_train_ms, 0.0);
  EXPECT_EQ(report.ranking.order, std::vector<ClassifierKind>{ClassifierKind::kNaiveBayes});
  EXPECT_EQ(report.corpus_size, 20u);
  EXPECT_THROW(report.summary(ClassifierKind::kBpn), Error);
}

TEST(HarnessTest, DeterministicApartFromTimings) {
  const Corpus corpus = make_separable_corpus(10, 2);
  ExperimentConfig config;
  config.seeds = {1, 2};
  config.classifier_config.random_forest.n_trees = 10;
  config.classifier_config.gradient_boost.rounds = 5;
  config.classifier_config.bpn.epochs = 5;
  config.classifier_config.knn.k = 5;
  BenchmarkReport a = run_experiment(corpus, config);
  BenchmarkReport b = run_experiment(corpus, config);
  zero_timings(a);
  zero_timings(b);
  EXPECT_EQ(a, b);
  EXPECT_EQ(render_report(a, OutputFormat::kJson), render_report(b, OutputFormat::kJson));
  for (const auto& s : a.per_classifier) {
    EXPECT_EQ(s.runs.size(), 2u);
    EXPECT_EQ(s.mean.cpu_time_train_ms, 0.0);
    for (const auto& r : s.runs) EXPECT_EQ(r.train_ms, 0.0);
  }
}

TEST(HarnessTest, MeanAndSpreadOverSeeds) {
  const Corpus corpus = make_separable_corpus(6, 3);
  ExperimentConfig config = SmallExperiment();
  config.classifiers = {ClassifierKind::kKnn};
  config.classifier_config.knn.k = 3;
  config.seeds = {1, 2, 3};
  config.test_fraction = 0.5;
  // Swapping some labels makes the accuracies differ between seeds.
  std::vector<Review> reviews = corpus.reviews();
  for (std::size_t i = 0; i + 1 < reviews.size(); i += 4) {
    std::swap(reviews[i].label, reviews[i + 1].label);
  }
  const BenchmarkReport report = run_experiment(Corpus(reviews), config);
  const auto& s = report.per_classifier[0];
  ASSERT_EQ(s.runs.size(), 3u);
  std::vector<double> acc;
  for (const auto& r : s.runs) acc.push_back(accuracy(r.confusion));
  const double mean = (acc[0] + acc[1] + acc[2]) / 3;
  double var = 0.0;
  for (const double a : acc) var += (a - mean) * (a - mean);
  EXPECT_NEAR(s.mean.accuracy, mean, 1e-12);
  EXPECT_NEAR(s.stdev.accuracy, std::sqrt(var / 2), 1e-12);
}

TEST(HarnessTest, FoldsCoverCorpus) {
  const Corpus corpus = make_separable_corpus(5, 4);
  ExperimentConfig config = SmallExperiment();
  config.folds = 5;
  const BenchmarkReport report = run_experiment(corpus, config);
  const auto& runs = report.per_classifier[0].runs;
  ASSERT_EQ(runs.size(), 5u);
  std::size_t tested = 0;
  for (std::size_t f = 0; f < runs.size(); ++f) {
    EXPECT_EQ(runs[f].fold, f);
    EXPECT_EQ(runs[f].train_size + runs[f].test_size, corpus.size());
    EXPECT_EQ(runs[f].confusion.total(), runs[f].test_size);
    tested += runs[f].test_size;
  }
  EXPECT_EQ(tested, corpus.size());
}

TEST(HarnessTest, StratifiedAndFitOnAll) {
  const Corpus corpus = make_separable_corpus(10, 5);
  ExperimentConfig config = SmallExperiment();
  config.stratified = true;
  const auto split = run_experiment(corpus, config);
  config.stratified = false;
  config.fit_on_all = true;
  const auto all = run_experiment(corpus, config);
  EXPECT_EQ(split.per_classifier[0].runs[0].test_size, 10u);
  EXPECT_LE(all.per_classifier[0].runs[0].vocabulary_size, 40u);
  EXPECT_GE(all.per_classifier[0].runs[0].vocabulary_size,
            split.per_classifier[0].runs[0].vocabulary_size);
}

TEST(HarnessTest, ClassifierErrorsNameTheKind) {
  const Corpus corpus = make_separable_corpus(2, 1);
  ExperimentConfig config = SmallExperiment();
  config.classifiers = {ClassifierKind::kKnn};  // k = 25 exceeds 8 training rows
  try {
    run_experiment(corpus, config);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("knn"), std::string::npos) << e.what();
  }
}

TEST(RankingTest, Examples) {
  const std::vector<EvaluationReport> two = {Entry(ClassifierKind::kKnn, 0.6, 0.5),
                                             Entry(ClassifierKind::kBpn, 0.7, 0.5)};
  const Ranking r = rank_and_recommend(two);
  EXPECT_EQ(r.order, (std::vector{ClassifierKind::kBpn, ClassifierKind::kKnn}));
  EXPECT_EQ(r.recommendation, std::vector{ClassifierKind::kBpn});

  const std::vector<EvaluationReport> tied = {Entry(ClassifierKind::kNaiveBayes, 0.6, 0.66),
                                              Entry(ClassifierKind::kKnn, 0.6, 0.67)};
  EXPECT_EQ(rank_and_recommend(tied).order,
            (std::vector{ClassifierKind::kKnn, ClassifierKind::kNaiveBayes}));

  const std::vector<EvaluationReport> same = {Entry(ClassifierKind::kBpn, 0.6, 0.6),
                                              Entry(ClassifierKind::kLinearSvm, 0.6, 0.6)};
  const Ranking both = rank_and_recommend(same);
  EXPECT_EQ(both.order, (std::vector{ClassifierKind::kLinearSvm, ClassifierKind::kBpn}));
  EXPECT_EQ(both.recommendation, both.order);
}

TEST(RankingTest, PublishedOverallResults) {
  const std::vector<EvaluationReport> rows = {
      Entry(ClassifierKind::kGradientBoost, 0.5854, 0.59),
      Entry(ClassifierKind::kLinearSvm, 0.6466, 0.65),
      Entry(ClassifierKind::kSgdLinear, 0.6557, 0.66),
      Entry(ClassifierKind::kRandomForest, 0.6402, 0.64),
      Entry(ClassifierKind::kNaiveBayes, 0.6658, 0.64),
      Entry(ClassifierKind::kLogisticRegression, 0.6658, 0.66),
      Entry(ClassifierKind::kKnn, 0.5781, 0.57),
      Entry(ClassifierKind::kBpn, 0.7127, 0.67)};
  const Ranking r = rank_and_recommend(rows);
  EXPECT_EQ(r.order.front(), ClassifierKind::kBpn);
  EXPECT_EQ(r.recommendation, std::vector{ClassifierKind::kBpn});
  EXPECT_EQ(r.order[1], ClassifierKind::kLogisticRegression);
  EXPECT_EQ(r.order.back(), ClassifierKind::kKnn);
}

TEST(RenderTest, SingleClassifierMarkdownHasTwoTables) {
  const BenchmarkReport report = run_experiment(make_separable_corpus(4, 1), SmallExperiment());
  const std::string md = render_report(report, OutputFormat::kMarkdown);
  EXPECT_EQ(CountTables(md), 2u);
  EXPECT_EQ(CountOccurrences(md, "| Emotion Tags | Precision | Recall | F1-score |"), 1u);
  EXPECT_EQ(CountOccurrences(md, "\n| Accuracy | "), 1u);
  EXPECT_EQ(
      CountOccurrences(md, "| Classifier | Precision (Avg) | Recall (Avg) | F1-Score (Avg) | Accuracy |"),
      1u);
  for (const char* row : {"| Joy |", "| Fear |", "| Sadness |", "| Shame |", "| Guilt |",
                          "| CPU Time train (ms) |", "| Naive Bayes |"}) {
    EXPECT_EQ(CountOccurrences(md, row), 1u) << row;
  }
  EXPECT_NE(md.find("Recommendation: Naive Bayes"), std::string::npos);
  EXPECT_EQ(md.find("±"), std::string::npos);
}

TEST(RenderTest, MultipleRunsShowSpread) {
  ExperimentConfig config = SmallExperiment();
  config.classifiers = {ClassifierKind::kNaiveBayes, ClassifierKind::kLogisticRegression};
  config.seeds = {1, 2};
  const BenchmarkReport report = run_experiment(make_separable_corpus(4, 1), config);
  const std::string md = render_report(report, OutputFormat::kMarkdown);
  EXPECT_EQ(CountTables(md), 3u);
  EXPECT_NE(md.find("±"), std::string::npos);
}

TEST(RenderTest, JsonRoundTrip) {
  ExperimentConfig config = SmallExperiment();
  config.classifiers = {ClassifierKind::kNaiveBayes, ClassifierKind::kSgdLinear};
  config.seeds = {4, 5};
  config.classifier_config.sgd.loss = SgdLoss::kLog;
  const BenchmarkReport report = run_experiment(make_separable_corpus(5, 2), config);
  const std::string json = render_report(report, OutputFormat::kJson);
  const BenchmarkReport parsed = report_from_json(json);
  EXPECT_EQ(parsed, report);
  EXPECT_EQ(render_report(parsed, OutputFormat::kJson), json);
  const auto doc = nlohmann::json::parse(json);
  EXPECT_EQ(doc["format"], "emotext-benchmark");
  EXPECT_THROW(report_from_json("{}"), Error);
  EXPECT_THROW(report_from_json("[]"), Error);
}

TEST(TimingTest, NoOpIsFast) {
  const double ms = measure_time([] {});
  EXPECT_GE(ms, 0.0);
  EXPECT_LT(ms, 10.0);
  const double slept = measure_time([] { std::this_thread::sleep_for(std::chrono::milliseconds(20)); });
  EXPECT_GE(slept, 19.0);
}

TEST(TimingTest, EnvironmentDescription) {
  EXPECT_TRUE(environment_description().starts_with("emotext 0.1.0"));
}

TEST(ConfigTest, SetValues) {
  ExperimentConfig config;
  set_config_value(config, "seeds", "1, 2,3");
  set_config_value(config, "test_fraction", "0.25");
  set_config_value(config, "classifiers", "knn,bpn");
  set_config_value(config, "scheme", "tf");
  set_config_value(config, "fit-on-all", "true");
  set_config_value(config, "format", "json");
  set_config_value(config, "knn.k", "7");
  set_config_value(config, "knn.distance", "euclidean");
  set_config_value(config, "logistic_regression.mode", "multinomial");
  EXPECT_EQ(config.effective_seeds(), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(config.test_fraction, 0.25);
  EXPECT_EQ(config.classifiers, (std::vector{ClassifierKind::kKnn, ClassifierKind::kBpn}));
  EXPECT_EQ(config.feature_scheme, FeatureScheme::kTf);
  EXPECT_TRUE(config.fit_on_all);
  EXPECT_EQ(config.output_format, OutputFormat::kJson);
  EXPECT_EQ(config.classifier_config.knn.k, 7u);
  EXPECT_EQ(config.classifier_config.knn.distance, DistanceMetric::kEuclidean);
  EXPECT_EQ(config.classifier_config.logistic.mode, LogisticMode::kMultinomial);
  set_config_value(config, "classifiers", "all");
  EXPECT_EQ(config.classifiers.size(), 8u);
}

TEST(ConfigTest, RejectsBadValues) {
  ExperimentConfig config;
  EXPECT_THROW(set_config_value(config, "colour", "red"), Error);
  EXPECT_THROW(set_config_value(config, "seed", "-3"), Error);
  EXPECT_THROW(set_config_value(config, "test-fraction", "abc"), Error);
  EXPECT_THROW(set_config_value(config, "classifiers", "knn,perceptron"), Error);
  EXPECT_THROW(set_config_value(config, "knn.radius", "2"), Error);
  EXPECT_THROW(set_config_value(config, "stratified", "maybe"), Error);
  EXPECT_THROW(set_config_value(config, "format", "html"), Error);

  ExperimentConfig twice;
  twice.classifiers = {ClassifierKind::kKnn, ClassifierKind::kKnn};
  EXPECT_THROW(twice.validate(), Error);
  ExperimentConfig one_fold;
  one_fold.folds = 1;
  EXPECT_THROW(one_fold.validate(), Error);
  ExperimentConfig bad_fraction;
  bad_fraction.test_fraction = 1.0;
  EXPECT_THROW(bad_fraction.validate(), Error);
}

TEST(ConfigTest, ConfigText) {
  ExperimentConfig config;
  apply_config_text(config,
                    "# experiment\n"
                    "seed = 9\n"
                    "\n"
                    "random_forest.n_trees = 50   # fewer trees\n"
                    "stratified = yes\n");
  EXPECT_EQ(config.seed, 9u);
  EXPECT_EQ(config.classifier_config.random_forest.n_trees, 50u);
  EXPECT_TRUE(config.stratified);
  try {
    apply_config_text(config, "seed = 1\nnot a pair\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  const auto path = std::filesystem::path(::testing::TempDir()) / "bench.conf";
  std::ofstream(path) << "folds = 4\n";
  apply_config_file(config, path);
  EXPECT_EQ(config.folds, 4u);
  EXPECT_THROW(apply_config_file(config, "/nonexistent/bench.conf"), Error);
}

TEST(ConfigTest, MissingDatasetPath) {
  EXPECT_THROW(run_experiment(ExperimentConfig{}), Error);
}

}  // namespace
}  // namespace emotext
