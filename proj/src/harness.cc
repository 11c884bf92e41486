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

#include <sys/utsname.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "emotext/model_io.h"
#include "emotext/preprocess.h"
#include "json.hpp"

namespace emotext {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kReportFormatName = "emotext-benchmark";
constexpr int kReportFormatVersion = 1;
constexpr std::string_view kVersion = "0.1.0";

// ---- value parsing ---------------------------------------------------------

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view what) {
  throw Error("option '" + std::string(key) + "': '" + std::string(value) + "' is not " +
              std::string(what));
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "a non-negative integer");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "a number");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  std::string lower(value);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "true" || lower == "1" || lower == "yes" || lower == "on") return true;
  if (lower == "false" || lower == "0" || lower == "no" || lower == "off") return false;
  bad_value(key, value, "a boolean");
}

// ---- statistics ------------------------------------------------------------

double mean_of(const std::vector<double>& v) {
  double sum = 0.0;
  for (const double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double stdev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double sq = 0.0;
  for (const double x : v) sq += (x - m) * (x - m);
  return std::sqrt(sq / static_cast<double>(v.size() - 1));
}

ClassifierSummary summarize(ClassifierKind kind, std::vector<RunRecord> runs) {
  std::vector<EvaluationReport> reports;
  for (const auto& r : runs) reports.push_back(evaluate(kind, r.confusion, r.train_ms, r.predict_ms));
  const auto field = [&](auto get) {
    std::vector<double> v;
    for (const auto& r : reports) v.push_back(get(r));
    return v;
  };

  ClassifierSummary s;
  s.mean.classifier = kind;
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    s.mean.per_label[l].precision = mean_of(field([&](const auto& r) { return r.per_label[l].precision; }));
    s.mean.per_label[l].recall = mean_of(field([&](const auto& r) { return r.per_label[l].recall; }));
    s.mean.per_label[l].f1 = mean_of(field([&](const auto& r) { return r.per_label[l].f1; }));
  }
  const auto acc = field([](const auto& r) { return r.accuracy; });
  const auto mp = field([](const auto& r) { return r.macro_precision; });
  const auto mr = field([](const auto& r) { return r.macro_recall; });
  const auto mf = field([](const auto& r) { return r.macro_f1; });
  s.mean.accuracy = mean_of(acc);
  s.mean.macro_precision = mean_of(mp);
  s.mean.macro_recall = mean_of(mr);
  s.mean.macro_f1 = mean_of(mf);
  s.mean.cpu_time_train_ms = mean_of(field([](const auto& r) { return r.cpu_time_train_ms; }));
  s.mean.cpu_time_predict_ms =
      mean_of(field([](const auto& r) { return r.cpu_time_predict_ms; }));
  s.stdev = {stdev_of(acc), stdev_of(mp), stdev_of(mr), stdev_of(mf)};
  s.runs = std::move(runs);
  return s;
}

// ---- pipeline --------------------------------------------------------------

template <typename T>
std::vector<T> pick(const std::vector<T>& items, const std::vector<std::size_t>& indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (const auto i : indices) out.push_back(items[i]);
  return out;
}

std::vector<SplitPlan> plans_for(const Corpus& corpus, const ExperimentConfig& config,
                                 std::uint64_t seed) {
  if (config.folds >= 2) return kfold_split(corpus.size(), config.folds, seed);
  if (config.stratified) return {stratified_split(corpus.labels(), config.test_fraction, seed)};
  return {split(corpus, config.test_fraction, seed)};
}

// ---- JSON ------------------------------------------------------------------

Json metrics_json(const LabelMetrics& m) {
  return Json{{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

LabelMetrics metrics_from(const Json& j) {
  return {j.at("precision").get<double>(), j.at("recall").get<double>(),
          j.at("f1").get<double>()};
}

Json run_json(const RunRecord& r) {
  Json confusion = Json::array();
  for (const auto& row : r.confusion.counts) confusion.push_back(row);
  return Json{{"seed", r.seed},
              {"fold", r.fold},
              {"train_size", r.train_size},
              {"test_size", r.test_size},
              {"vocabulary_size", r.vocabulary_size},
              {"confusion", confusion},
              {"train_ms", r.train_ms},
              {"predict_ms", r.predict_ms}};
}

RunRecord run_from(const Json& j) {
  RunRecord r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.fold = j.at("fold").get<std::size_t>();
  r.train_size = j.at("train_size").get<std::size_t>();
  r.test_size = j.at("test_size").get<std::size_t>();
  r.vocabulary_size = j.at("vocabulary_size").get<std::size_t>();
  const auto& rows = j.at("confusion");
  if (rows.size() != kNumEmotions) throw Error("confusion matrix must have 5 rows");
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    r.confusion.counts[i] = rows[i].get<std::array<std::uint64_t, kNumEmotions>>();
  }
  r.train_ms = j.at("train_ms").get<double>();
  r.predict_ms = j.at("predict_ms").get<double>();
  return r;
}

Json kinds_json(std::span<const ClassifierKind> kinds) {
  Json out = Json::array();
  for (const auto k : kinds) out.push_back(kind_name(k));
  return out;
}

std::vector<ClassifierKind> kinds_from(const Json& j) {
  std::vector<ClassifierKind> out;
  for (const auto& k : j) out.push_back(parse_kind(k.get<std::string>()));
  return out;
}

Json summary_json(const ClassifierSummary& s) {
  const auto& m = s.mean;
  Json per_label = Json::object();
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    per_label[std::string(label_name(label_at(l)))] = metrics_json(m.per_label[l]);
  }
  Json runs = Json::array();
  for (const auto& r : s.runs) runs.push_back(run_json(r));
  return Json{{"classifier", kind_name(m.classifier)},
              {"per_label", per_label},
              {"macro_precision", m.macro_precision},
              {"macro_recall", m.macro_recall},
              {"macro_f1", m.macro_f1},
              {"accuracy", m.accuracy},
              {"cpu_time_train_ms", m.cpu_time_train_ms},
              {"cpu_time_predict_ms", m.cpu_time_predict_ms},
              {"stdev",
               {{"accuracy", s.stdev.accuracy},
                {"macro_precision", s.stdev.macro_precision},
                {"macro_recall", s.stdev.macro_recall},
                {"macro_f1", s.stdev.macro_f1}}},
              {"runs", runs}};
}

ClassifierSummary summary_from(const Json& j) {
  ClassifierSummary s;
  auto& m = s.mean;
  m.classifier = parse_kind(j.at("classifier").get<std::string>());
  const auto& per_label = j.at("per_label");
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    m.per_label[l] = metrics_from(per_label.at(std::string(label_name(label_at(l)))));
  }
  m.macro_precision = j.at("macro_precision").get<double>();
  m.macro_recall = j.at("macro_recall").get<double>();
  m.macro_f1 = j.at("macro_f1").get<double>();
  m.accuracy = j.at("accuracy").get<double>();
  m.cpu_time_train_ms = j.at("cpu_time_train_ms").get<double>();
  m.cpu_time_predict_ms = j.at("cpu_time_predict_ms").get<double>();
  const auto& sd = j.at("stdev");
  s.stdev = {sd.at("accuracy").get<double>(), sd.at("macro_precision").get<double>(),
             sd.at("macro_recall").get<double>(), sd.at("macro_f1").get<double>()};
  for (const auto& r : j.at("runs")) s.runs.push_back(run_from(r));
  return s;
}

std::string report_json(const BenchmarkReport& report) {
  std::vector<ClassifierKind> kinds;
  Json config = Json::object();
  Json results = Json::array();
  for (const auto& s : report.per_classifier) {
    kinds.push_back(s.mean.classifier);
    config[std::string(kind_name(s.mean.classifier))] =
        Json::parse(config_to_json(s.mean.classifier, report.classifier_config));
    results.push_back(summary_json(s));
  }
  Json doc{{"format", kReportFormatName},
           {"version", kReportFormatVersion},
           {"environment", report.environment},
           {"experiment",
            {{"corpus_size", report.corpus_size},
             {"test_fraction", report.test_fraction},
             {"seeds", report.seeds},
             {"folds", report.folds},
             {"stratified", report.stratified},
             {"feature_scheme", scheme_name(report.feature_scheme)},
             {"fit_on_all", report.fit_on_all},
             {"classifiers", kinds_json(kinds)},
             {"classifier_config", config}}},
           {"results", results},
           {"ranking", kinds_json(report.ranking.order)},
           {"recommendation", kinds_json(report.ranking.recommendation)}};
  return doc.dump(2) + "\n";
}

// ---- markdown --------------------------------------------------------------

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string with_spread(double mean, double stdev, bool multiple, int digits) {
  std::string out = fixed(mean, digits);
  if (multiple) out += " ± " + fixed(stdev, digits);
  return out;
}

std::string report_markdown(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "# Emotion classification benchmark\n\n";
  out << "- Corpus: " << report.corpus_size << " reviews\n";
  if (report.folds >= 2) {
    out << "- Evaluation: " << report.folds << "-fold cross-validation\n";
  } else {
    out << "- Evaluation: " << (report.stratified ? "stratified " : "") << "holdout, test fraction "
        << fixed(report.test_fraction, 2) << "\n";
  }
  out << "- Seeds:";
  for (std::size_t i = 0; i < report.seeds.size(); ++i) {
    out << (i == 0 ? " " : ", ") << report.seeds[i];
  }
  out << "\n- Features: " << scheme_name(report.feature_scheme)
      << " (naive_bayes uses count), fitted on "
      << (report.fit_on_all ? "all documents" : "the training split") << "\n";
  out << "- Environment: " << report.environment << "\n";

  for (const auto& s : report.per_classifier) {
    const auto& m = s.mean;
    const bool multiple = s.runs.size() > 1;
    out << "\n## " << kind_display_name(m.classifier) << "\n\n";
    out << "| Emotion Tags | Precision | Recall | F1-score |\n";
    out << "|---|---:|---:|---:|\n";
    for (std::size_t l = 0; l < kNumEmotions; ++l) {
      out << "| " << label_display_name(label_at(l)) << " | " << fixed(m.per_label[l].precision, 2)
          << " | " << fixed(m.per_label[l].recall, 2) << " | " << fixed(m.per_label[l].f1, 2)
          << " |\n";
    }
    out << "| Accuracy | " << with_spread(100.0 * m.accuracy, 100.0 * s.stdev.accuracy, multiple, 2)
        << "% | | |\n";
    out << "| CPU Time train (ms) | " << fixed(m.cpu_time_train_ms, 2) << " | | |\n";
    out << "| CPU Time predict (ms) | " << fixed(m.cpu_time_predict_ms, 2) << " | | |\n";
  }

  out << "\n## Overall Results\n\n";
  out << "| Classifier | Precision (Avg) | Recall (Avg) | F1-Score (Avg) | Accuracy |\n";
  out << "|---|---:|---:|---:|---:|\n";
  for (const auto& s : report.per_classifier) {
    const auto& m = s.mean;
    const bool multiple = s.runs.size() > 1;
    out << "| " << kind_display_name(m.classifier) << " | "
        << with_spread(m.macro_precision, s.stdev.macro_precision, multiple, 2) << " | "
        << with_spread(m.macro_recall, s.stdev.macro_recall, multiple, 2) << " | "
        << with_spread(m.macro_f1, s.stdev.macro_f1, multiple, 2) << " | "
        << with_spread(100.0 * m.accuracy, 100.0 * s.stdev.accuracy, multiple, 2) << " |\n";
  }

  out << "\nRanking by accuracy:";
  for (std::size_t i = 0; i < report.ranking.order.size(); ++i) {
    out << (i == 0 ? " " : ", ") << (i + 1) << ". " << kind_name(report.ranking.order[i]);
  }
  out << "\n\nRecommendation:";
  for (std::size_t i = 0; i < report.ranking.recommendation.size(); ++i) {
    out << (i == 0 ? " " : ", ") << kind_display_name(report.ranking.recommendation[i]);
  }
  out << "\n";
  return out.str();
}

}  // namespace

std::string_view format_name(OutputFormat format) {
  return format == OutputFormat::kMarkdown ? "markdown" : "json";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  if (name == "json") return OutputFormat::kJson;
  throw Error("unknown output format '" + std::string(name) + "'");
}

std::vector<std::uint64_t> ExperimentConfig::effective_seeds() const {
  return seeds.empty() ? std::vector<std::uint64_t>{seed} : seeds;
}

void ExperimentConfig::validate() const {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("test fraction must lie strictly between 0 and 1");
  }
  if (classifiers.empty()) throw Error("no classifiers configured");
  for (std::size_t i = 0; i < classifiers.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (classifiers[i] == classifiers[j]) {
        throw Error("classifier '" + std::string(kind_name(classifiers[i])) + "' listed twice");
      }
    }
    classifier_config.validate(classifiers[i]);
  }
  if (folds == 1) throw Error("cross-validation needs at least 2 folds");
}

void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  const auto dot = key.find('.');
  if (dot != std::string_view::npos) {
    const ClassifierKind kind = parse_kind(key.substr(0, dot));
    Json v;
    try {
      v = Json::parse(value);
    } catch (const nlohmann::json::exception&) {
      v = std::string(value);
    }
    Json block{{std::string(key.substr(dot + 1)), v}};
    config_from_json(kind, block.dump(), config.classifier_config);
    return;
  }
  std::string name(key);
  std::replace(name.begin(), name.end(), '_', '-');
  if (name == "data") {
    config.dataset_path = std::string(value);
  } else if (name == "stop-words") {
    config.stop_word_path = std::string(value);
  } else if (name == "test-fraction") {
    config.test_fraction = parse_double(key, value);
  } else if (name == "seed") {
    config.seed = parse_u64(key, value);
  } else if (name == "seeds") {
    config.seeds.clear();
    for (const auto item : split_list(value)) config.seeds.push_back(parse_u64(key, item));
  } else if (name == "scheme") {
    config.feature_scheme = parse_scheme(value);
  } else if (name == "fit-on-all") {
    config.fit_on_all = parse_bool(key, value);
  } else if (name == "stratified") {
    config.stratified = parse_bool(key, value);
  } else if (name == "folds") {
    config.folds = parse_u64(key, value);
  } else if (name == "classifiers") {
    config.classifiers.clear();
    for (const auto item : split_list(value)) {
      if (item == "all") {
        config.classifiers.assign(kAllClassifierKinds.begin(), kAllClassifierKinds.end());
      } else {
        config.classifiers.push_back(parse_kind(item));
      }
    }
  } else if (name == "format") {
    config.output_format = parse_format(value);
  } else {
    throw Error("unknown option '" + std::string(key) + "'");
  }
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      set_config_value(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str());
}

const ClassifierSummary& BenchmarkReport::summary(ClassifierKind kind) const {
  for (const auto& s : per_classifier) {
    if (s.mean.classifier == kind) return s;
  }
  throw Error("report has no entry for '" + std::string(kind_name(kind)) + "'");
}

Ranking rank_and_recommend(std::span<const EvaluationReport> reports) {
  std::vector<const EvaluationReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    if (a->accuracy != b->accuracy) return a->accuracy > b->accuracy;
    if (a->macro_f1 != b->macro_f1) return a->macro_f1 > b->macro_f1;
    return a->classifier < b->classifier;
  });
  Ranking ranking;
  for (const auto* r : sorted) {
    ranking.order.push_back(r->classifier);
    if (r->accuracy == sorted.front()->accuracy && r->macro_f1 == sorted.front()->macro_f1) {
      ranking.recommendation.push_back(r->classifier);
    }
  }
  return ranking;
}

BenchmarkReport run_experiment(const ExperimentConfig& config) {
  if (config.dataset_path.empty()) throw Error("no dataset path given");
  return run_experiment(load_corpus(config.dataset_path), config);
}

BenchmarkReport run_experiment(const Corpus& corpus, const ExperimentConfig& config) {
  config.validate();
  std::optional<StopWordList> custom_stop;
  if (!config.stop_word_path.empty()) custom_stop = load_stop_words(config.stop_word_path);
  const StopWordList& stop = custom_stop ? *custom_stop : StopWordList::default_english();
  const std::vector<TokenizedReview> docs = preprocess_corpus(corpus, stop);

  std::map<ClassifierKind, std::vector<RunRecord>> runs;
  for (const auto seed : config.effective_seeds()) {
    const auto plans = plans_for(corpus, config, seed);
    for (std::size_t fold = 0; fold < plans.size(); ++fold) {
      const auto& plan = plans[fold];
      const auto train_docs = pick(docs, plan.train_indices);
      const auto test_docs = pick(docs, plan.test_indices);
      const auto extractor =
          FeatureExtractor::fit(config.fit_on_all ? std::span<const TokenizedReview>(docs)
                                                  : std::span<const TokenizedReview>(train_docs));
      std::vector<Emotion> y_train;
      std::vector<Emotion> y_test;
      for (const auto& d : train_docs) y_train.push_back(d.label);
      for (const auto& d : test_docs) y_test.push_back(d.label);

      std::map<FeatureScheme, std::pair<FeatureMatrix, FeatureMatrix>> matrices;
      for (const auto kind : config.classifiers) {
        const FeatureScheme scheme = preferred_scheme(kind, config.feature_scheme);
        if (!matrices.contains(scheme)) {
          matrices.emplace(scheme, std::make_pair(extractor.transform(train_docs, scheme),
                                                  extractor.transform(test_docs, scheme)));
        }
        const auto& [x_train, x_test] = matrices.at(scheme);

        RunRecord record;
        record.seed = seed;
        record.fold = fold;
        record.train_size = train_docs.size();
        record.test_size = test_docs.size();
        record.vocabulary_size = extractor.vocab.size();
        try {
          std::unique_ptr<TrainedModel> model;
          record.train_ms = measure_time(
              [&] { model = fit(kind, config.classifier_config, x_train, y_train, seed); });
          std::vector<PredictOutcome> predictions;
          record.predict_ms = measure_time([&] { predictions = model->predict_all(x_test); });
          std::vector<Emotion> y_pred;
          for (const auto& p : predictions) y_pred.push_back(p.label);
          record.confusion = confusion_matrix(y_test, y_pred);
        } catch (const Error& e) {
          throw Error(std::string(kind_name(kind)) + " failed: " + e.what());
        }
        runs[kind].push_back(std::move(record));
      }
    }
  }

  BenchmarkReport report;
  report.corpus_size = corpus.size();
  report.test_fraction = config.test_fraction;
  report.seeds = config.effective_seeds();
  report.folds = config.folds;
  report.stratified = config.stratified;
  report.feature_scheme = config.feature_scheme;
  report.fit_on_all = config.fit_on_all;
  report.classifier_config = config.classifier_config;
  std::vector<EvaluationReport> means;
  for (const auto kind : config.classifiers) {
    report.per_classifier.push_back(summarize(kind, std::move(runs[kind])));
    means.push_back(report.per_classifier.back().mean);
  }
  report.ranking = rank_and_recommend(means);
  report.environment = environment_description();
  return report;
}

std::string render_report(const BenchmarkReport& report, OutputFormat format) {
  return format == OutputFormat::kJson ? report_json(report) : report_markdown(report);
}

BenchmarkReport report_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    if (doc.at("format").get<std::string>() != kReportFormatName) {
      throw Error("not an emotext benchmark report");
    }
    if (doc.at("version").get<int>() != kReportFormatVersion) {
      throw Error("unsupported report format version");
    }
    BenchmarkReport r;
    r.environment = doc.at("environment").get<std::string>();
    const auto& e = doc.at("experiment");
    r.corpus_size = e.at("corpus_size").get<std::size_t>();
    r.test_fraction = e.at("test_fraction").get<double>();
    r.seeds = e.at("seeds").get<std::vector<std::uint64_t>>();
    r.folds = e.at("folds").get<std::size_t>();
    r.stratified = e.at("stratified").get<bool>();
    r.feature_scheme = parse_scheme(e.at("feature_scheme").get<std::string>());
    r.fit_on_all = e.at("fit_on_all").get<bool>();
    for (const auto& [name, block] : e.at("classifier_config").items()) {
      config_from_json(parse_kind(name), block.dump(), r.classifier_config);
    }
    for (const auto& s : doc.at("results")) r.per_classifier.push_back(summary_from(s));
    r.ranking.order = kinds_from(doc.at("ranking"));
    r.ranking.recommendation = kinds_from(doc.at("recommendation"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed benchmark report: ") + e.what());
  }
}

void zero_timings(BenchmarkReport& report) {
  for (auto& s : report.per_classifier) {
    s.mean.cpu_time_train_ms = 0.0;
    s.mean.cpu_time_predict_ms = 0.0;
    for (auto& r : s.runs) {
      r.train_ms = 0.0;
      r.predict_ms = 0.0;
    }
  }
}

double measure_time(const std::function<void()>& action) {
  const auto start = std::chrono::steady_clock::now();
  action();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string environment_description() {
  std::string out = "emotext " + std::string(kVersion);
#if defined(__clang__)
  out += "; clang " + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
  out += "; gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#endif
  utsname info{};
  if (uname(&info) == 0) {
    out += "; " + std::string(info.sysname) + " " + info.machine;
  }
  return out;
}

}  // namespace emotext
