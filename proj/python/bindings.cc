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

// Python bindings for the emotext core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emotext/classifiers.h"
#include "emotext/corpus.h"
#include "emotext/features.h"
#include "emotext/harness.h"
#include "emotext/metrics.h"
#include "emotext/model_io.h"
#include "emotext/preprocess.h"
#include "emotext/synthetic.h"

namespace py = pybind11;

namespace {

using emotext::ClassifierKind;
using emotext::Emotion;

Emotion to_label(const std::string& name) {
  const auto label = emotext::parse_label(name);
  if (!label) throw emotext::Error("unknown label '" + name + "'");
  return *label;
}

std::vector<Emotion> to_labels(const std::vector<std::string>& names) {
  std::vector<Emotion> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(to_label(n));
  return out;
}

std::vector<emotext::TokenizedReview> to_docs(const std::vector<std::string>& texts) {
  std::vector<emotext::TokenizedReview> docs;
  docs.reserve(texts.size());
  for (const auto& t : texts) {
    docs.push_back({docs.size(), emotext::preprocess_text(t, emotext::StopWordList::default_english()),
                    Emotion::kJoy});
  }
  return docs;
}

emotext::Corpus to_corpus(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::vector<std::pair<Emotion, std::string>> pairs;
  pairs.reserve(rows.size());
  for (const auto& [label, text] : rows) pairs.emplace_back(to_label(label), text);
  return emotext::Corpus::from_pairs(pairs);
}

std::vector<std::pair<std::string, std::string>> from_corpus(const emotext::Corpus& corpus) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(corpus.size());
  for (const auto& r : corpus.reviews()) {
    rows.emplace_back(std::string(emotext::label_name(r.label)), r.text);
  }
  return rows;
}

// A classifier together with the vocabulary and IDF table it was trained on.
class TextClassifier {
 public:
  TextClassifier(const std::string& kind, const std::string& config_json)
      : kind_(emotext::parse_kind(kind)) {
    emotext::config_from_json(kind_, config_json, config_);
    config_.validate(kind_);
  }

  void fit(const std::vector<std::string>& texts, const std::vector<std::string>& labels,
           std::uint64_t seed) {
    const auto y = to_labels(labels);
    const auto docs = to_docs(texts);
    auto extractor = emotext::FeatureExtractor::fit(docs);
    const auto x = extractor.transform(docs, scheme());
    model_ = emotext::fit(kind_, config_, x, y, seed);
    extractor_ = std::move(extractor);
  }

  std::vector<std::string> predict(const std::vector<std::string>& texts) const {
    std::vector<std::string> out;
    for (const auto& outcome : outcomes(texts)) {
      out.emplace_back(emotext::label_name(outcome.label));
    }
    return out;
  }

  std::vector<std::vector<double>> scores(const std::vector<std::string>& texts) const {
    std::vector<std::vector<double>> out;
    for (const auto& outcome : outcomes(texts)) {
      out.emplace_back(outcome.scores.begin(), outcome.scores.end());
    }
    return out;
  }

  std::string model_json() const { return emotext::model_to_json(fitted()); }
  std::string kind() const { return std::string(emotext::kind_name(kind_)); }
  std::size_t vocabulary_size() const { return extractor_ ? extractor_->vocab.size() : 0; }

 private:
  emotext::FeatureScheme scheme() const {
    return emotext::preferred_scheme(kind_, emotext::FeatureScheme::kTfIdf);
  }

  const emotext::TrainedModel& fitted() const {
    if (!model_) throw emotext::Error("classifier is not fitted");
    return *model_;
  }

  std::vector<emotext::PredictOutcome> outcomes(const std::vector<std::string>& texts) const {
    const auto& model = fitted();
    return model.predict_all(extractor_->transform(to_docs(texts), scheme()));
  }

  ClassifierKind kind_;
  emotext::ClassifierConfig config_;
  std::optional<emotext::FeatureExtractor> extractor_;
  std::unique_ptr<emotext::TrainedModel> model_;
};

py::dict evaluate(const std::vector<std::string>& truth,
                  const std::vector<std::string>& predicted) {
  const auto cm = emotext::confusion_matrix(to_labels(truth), to_labels(predicted));
  py::dict per_label;
  for (const Emotion e : emotext::kAllEmotions) {
    const auto m = emotext::label_metrics(cm, e);
    py::dict d;
    d["precision"] = m.precision;
    d["recall"] = m.recall;
    d["f1"] = m.f1;
    per_label[py::str(std::string(emotext::label_name(e)))] = d;
  }
  std::vector<emotext::LabelMetrics> metrics;
  for (const Emotion e : emotext::kAllEmotions) metrics.push_back(emotext::label_metrics(cm, e));
  const auto macro = emotext::macro_average(metrics);
  py::dict out;
  out["confusion"] = cm.counts;
  out["per_label"] = per_label;
  out["accuracy"] = emotext::accuracy(cm);
  out["macro_precision"] = macro.precision;
  out["macro_recall"] = macro.recall;
  out["macro_f1"] = macro.f1;
  return out;
}

std::string run_benchmark(const std::vector<std::pair<std::string, std::string>>& rows,
                          const std::vector<std::pair<std::string, std::string>>& options,
                          bool zero_timing) {
  emotext::ExperimentConfig config;
  for (const auto& [key, value] : options) emotext::set_config_value(config, key, value);
  auto report = emotext::run_experiment(to_corpus(rows), config);
  if (zero_timing) emotext::zero_timings(report);
  return emotext::render_report(report, emotext::OutputFormat::kJson);
}

std::string render_markdown(const std::string& report_json) {
  return emotext::render_report(emotext::report_from_json(report_json),
                                emotext::OutputFormat::kMarkdown);
}

}  // namespace

PYBIND11_MODULE(_emotext, m) {
  m.doc() = "Emotion classification core: preprocessing, features, classifiers, metrics";
  py::register_exception<emotext::Error>(m, "EmotextError", PyExc_ValueError);

  m.attr("LABELS") = std::vector<std::string>{"joy", "fear", "sadness", "shame", "guilt"};
  m.attr("CLASSIFIERS") = [] {
    std::vector<std::string> names;
    for (const auto kind : emotext::kAllClassifierKinds) names.emplace_back(emotext::kind_name(kind));
    return names;
  }();

  m.def("tokenize", &emotext::tokenize, py::arg("text"));
  m.def("strip_punctuation", &emotext::strip_punctuation, py::arg("token"));
  m.def(
      "preprocess",
      [](const std::string& text, std::optional<std::vector<std::string>> stop_words) {
        if (!stop_words) return emotext::preprocess_text(text, emotext::StopWordList::default_english());
        return emotext::preprocess_text(text, emotext::StopWordList(*stop_words));
      },
      py::arg("text"), py::arg("stop_words") = py::none(),
      "Tokenize, strip edge punctuation and drop stop words.");
  m.def("default_stop_words",
        [] { return emotext::StopWordList::default_english().sorted_words(); });

  m.def(
      "split",
      [](std::size_t n, double test_fraction, std::uint64_t seed) {
        const auto plan = emotext::split(n, test_fraction, seed);
        return std::make_pair(plan.train_indices, plan.test_indices);
      },
      py::arg("n"), py::arg("test_fraction") = 0.2, py::arg("seed") = 42,
      "Returns (train_indices, test_indices).");

  m.def(
      "load_corpus",
      [](const std::string& path) { return from_corpus(emotext::load_corpus(path)); },
      py::arg("path"), "Reads a label,text CSV into (label, text) pairs.");
  m.def(
      "separable_corpus",
      [](std::size_t docs_per_label, std::uint64_t seed) {
        return from_corpus(emotext::make_separable_corpus(docs_per_label, seed));
      },
      py::arg("docs_per_label"), py::arg("seed") = 1);

  m.def(
      "tfidf",
      [](const std::vector<std::string>& texts) {
        const auto docs = to_docs(texts);
        const auto fx = emotext::FeatureExtractor::fit(docs);
        const auto matrix = fx.transform(docs, emotext::FeatureScheme::kTfIdf);
        std::vector<std::vector<std::pair<std::string, double>>> rows;
        for (const auto& row : matrix.rows) {
          auto& out = rows.emplace_back();
          for (std::size_t k = 0; k < row.nnz(); ++k) {
            out.emplace_back(fx.vocab.term(row.indices[k]), row.values[k]);
          }
        }
        return rows;
      },
      py::arg("texts"), "TF-IDF rows as (term, weight) lists, fitted on `texts`.");

  py::class_<TextClassifier>(m, "TextClassifier")
      .def(py::init<const std::string&, const std::string&>(), py::arg("kind"),
           py::arg("config_json") = "{}")
      .def("fit", &TextClassifier::fit, py::arg("texts"), py::arg("labels"),
           py::arg("seed") = 42)
      .def("predict", &TextClassifier::predict, py::arg("texts"))
      .def("scores", &TextClassifier::scores, py::arg("texts"))
      .def("model_json", &TextClassifier::model_json)
      .def_property_readonly("kind", &TextClassifier::kind)
      .def_property_readonly("vocabulary_size", &TextClassifier::vocabulary_size);

  m.def("evaluate", &evaluate, py::arg("truth"), py::arg("predicted"));
  m.def("run_benchmark", &run_benchmark, py::arg("rows"), py::arg("options"),
        py::arg("zero_timing") = false,
        "Runs the benchmark on (label, text) rows; options are (key, value) settings.");
  m.def("render_markdown", &render_markdown, py::arg("report_json"));
}
