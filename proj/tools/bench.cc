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

// bench: emotion classification benchmark driver.
//
//   bench run --data corpus.csv [--config FILE] [--seed N] [--seeds a,b,c]
//             [--classifiers list] [--format markdown|json] [--fit-on-all]
//             [--folds k] [--set key=value]... [--zero-timing] [--output FILE]
//   bench convert-isear RAW OUT
//   bench verify [--data corpus.csv]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emotext/acceptance.h"
#include "emotext/corpus.h"
#include "emotext/harness.h"

namespace {

struct RunOptions {
  std::string data;
  std::string config;
  std::string stop_words;
  std::string seed;
  std::string seeds;
  std::string classifiers;
  std::string format;
  std::string scheme;
  std::string test_fraction;
  std::string folds;
  bool fit_on_all = false;
  bool stratified = false;
  bool zero_timing = false;
  std::vector<std::string> overrides;
  std::string output;
};

int run(const RunOptions& opt) {
  emotext::ExperimentConfig config;
  if (!opt.config.empty()) emotext::apply_config_file(config, opt.config);
  const auto set = [&](const char* key, const std::string& value) {
    if (!value.empty()) emotext::set_config_value(config, key, value);
  };
  set("data", opt.data);
  set("stop-words", opt.stop_words);
  set("seed", opt.seed);
  set("seeds", opt.seeds);
  set("classifiers", opt.classifiers);
  set("format", opt.format);
  set("scheme", opt.scheme);
  set("test-fraction", opt.test_fraction);
  set("folds", opt.folds);
  if (opt.fit_on_all) config.fit_on_all = true;
  if (opt.stratified) config.stratified = true;
  for (const auto& entry : opt.overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw emotext::Error("--set expects key=value, got '" + entry + "'");
    emotext::set_config_value(config, entry.substr(0, eq), entry.substr(eq + 1));
  }

  auto report = emotext::run_experiment(config);
  if (opt.zero_timing) emotext::zero_timings(report);
  const std::string text = emotext::render_report(report, config.output_format);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw emotext::Error("cannot open '" + opt.output + "' for writing");
    out << text;
  }
  return 0;
}

int verify(const std::string& data) {
  std::string path = data;
  if (path.empty()) {
    if (const char* env = std::getenv("ISEAR_CSV"); env != nullptr) path = env;
  }
  std::optional<emotext::Corpus> corpus;
  if (!path.empty()) corpus = emotext::load_corpus(path);
  const auto results = emotext::run_acceptance(corpus ? &*corpus : nullptr);
  for (const auto& r : results) std::cout << emotext::format_check(r) << "\n";
  const bool ok = emotext::all_passed(results);
  std::cout << (ok ? "acceptance: all executed criteria passed" : "acceptance: FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emotion classification benchmark"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "Train, evaluate and compare classifiers");
  run_cmd->add_option("--data", run_opt.data, "Canonical label,text CSV corpus");
  run_cmd->add_option("--config", run_opt.config, "Flat key = value config file")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--stop-words", run_opt.stop_words, "Stop-word list, one per line");
  run_cmd->add_option("--seed", run_opt.seed, "Split and training seed (default 42)");
  run_cmd->add_option("--seeds", run_opt.seeds, "Comma-separated seeds to average over");
  run_cmd->add_option("--classifiers", run_opt.classifiers,
                      "Comma-separated subset of: naive_bayes, logistic_regression, "
                      "linear_svm, sgd_linear, knn, random_forest, gradient_boost, bpn");
  run_cmd->add_option("--format", run_opt.format, "markdown (default) or json");
  run_cmd->add_option("--scheme", run_opt.scheme, "Feature scheme: count, tf or tfidf");
  run_cmd->add_option("--test-fraction", run_opt.test_fraction, "Held-out fraction (0.2)");
  run_cmd->add_option("--folds", run_opt.folds, "k-fold cross-validation instead of holdout");
  run_cmd->add_flag("--fit-on-all", run_opt.fit_on_all,
                    "Fit vocabulary and IDF on all documents, test included");
  run_cmd->add_flag("--stratified", run_opt.stratified, "Per-label holdout split");
  run_cmd->add_flag("--zero-timing", run_opt.zero_timing, "Write all timing fields as 0");
  run_cmd->add_option("--set", run_opt.overrides, "Override one setting, e.g. knn.k=15");
  run_cmd->add_option("-o,--output", run_opt.output, "Write the report to a file");

  std::string raw_path;
  std::string out_path;
  auto* convert_cmd =
      app.add_subcommand("convert-isear", "Convert a raw ISEAR export to the canonical CSV");
  convert_cmd->add_option("raw", raw_path, "Raw ISEAR export")->required();
  convert_cmd->add_option("out", out_path, "Output CSV")->required();

  std::string verify_data;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--data", verify_data, "Canonical ISEAR CSV for criteria 7 and 8");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(run_opt);
    if (*convert_cmd) {
      const std::size_t rows = emotext::convert_isear(raw_path, out_path);
      std::cerr << "wrote " << rows << " reviews to " << out_path << "\n";
      return 0;
    }
    if (*verify_cmd) return verify(verify_data);
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
