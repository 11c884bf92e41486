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

#include "emotext/model_io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "emotext/bpn.h"
#include "emotext/knn.h"
#include "emotext/linear.h"
#include "emotext/naive_bayes.h"
#include "emotext/trees.h"
#include "json.hpp"

namespace emotext {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatName = "emotext-model";

// ---- scalar helpers --------------------------------------------------------

Json number_or_null(double v) {
  if (std::isinf(v) && v < 0) return nullptr;
  return v;
}

double number_from(const Json& j) {
  if (j.is_null()) return -std::numeric_limits<double>::infinity();
  return j.get<double>();
}

Json scores_to_json(const LabelScores& s) {
  Json out = Json::array();
  for (const double v : s) out.push_back(number_or_null(v));
  return out;
}

LabelScores scores_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kNumEmotions) throw Error("expected one value per label");
  LabelScores s{};
  for (std::size_t l = 0; l < kNumEmotions; ++l) s[l] = number_from(j[l]);
  return s;
}

Json sparse_to_json(std::span<const double> dense) {
  Json indices = Json::array();
  Json values = Json::array();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      indices.push_back(i);
      values.push_back(dense[i]);
    }
  }
  return Json{{"size", dense.size()}, {"indices", indices}, {"values", values}};
}

std::vector<double> sparse_from_json(const Json& j) {
  std::vector<double> dense(j.at("size").get<std::size_t>(), 0.0);
  const auto& indices = j.at("indices");
  const auto& values = j.at("values");
  if (indices.size() != values.size()) throw Error("index and value arrays differ in length");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const auto i = indices[k].get<std::size_t>();
    if (i >= dense.size()) throw Error("weight index out of range");
    dense[i] = values[k].get<double>();
  }
  return dense;
}

Json row_to_json(const SparseVector& row) {
  return Json{{"indices", row.indices}, {"values", row.values}};
}

SparseVector row_from_json(const Json& j) {
  SparseVector row;
  row.indices = j.at("indices").get<std::vector<std::uint32_t>>();
  row.values = j.at("values").get<std::vector<double>>();
  if (row.indices.size() != row.values.size()) {
    throw Error("index and value arrays differ in length");
  }
  return row;
}

template <typename Leaf, typename LeafToJson>
Json tree_to_json(const BinaryTree<Leaf>& tree, LeafToJson leaf_to_json) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    if (n.feature < 0) {
      nodes.push_back(Json::array({leaf_to_json(n.leaf)}));
    } else {
      nodes.push_back(Json::array({n.feature, n.threshold, n.left, n.right}));
    }
  }
  return nodes;
}

template <typename Leaf, typename LeafFromJson>
BinaryTree<Leaf> tree_from_json(const Json& j, LeafFromJson leaf_from_json) {
  BinaryTree<Leaf> tree;
  for (const auto& n : j) {
    typename BinaryTree<Leaf>::Node node;
    if (n.size() == 1) {
      node.leaf = leaf_from_json(n[0]);
    } else if (n.size() == 4) {
      node.feature = n[0].get<std::int32_t>();
      node.threshold = n[1].get<double>();
      node.left = n[2].get<std::uint32_t>();
      node.right = n[3].get<std::uint32_t>();
    } else {
      throw Error("malformed tree node");
    }
    tree.nodes.push_back(node);
  }
  for (const auto& n : tree.nodes) {
    if (n.feature >= 0 && (n.left >= tree.nodes.size() || n.right >= tree.nodes.size())) {
      throw Error("tree child index out of range");
    }
  }
  if (tree.nodes.empty()) throw Error("tree has no nodes");
  return tree;
}

Emotion label_from_json(const Json& j) {
  const auto label = parse_label(j.get<std::string>());
  if (!label) throw Error("unknown label '" + j.get<std::string>() + "'");
  return *label;
}

// ---- configs ---------------------------------------------------------------

template <typename T>
void read_field(const Json& j, std::string_view key, T& out) {
  try {
    out = j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error("config key '" + std::string(key) + "' has the wrong type");
  }
}

void read_count(const Json& j, std::string_view key, std::size_t& out) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw Error("config key '" + std::string(key) + "' must be a non-negative integer");
  }
  out = j.get<std::size_t>();
}

template <typename E>
E read_enum(const Json& j, std::string_view key,
            std::initializer_list<std::pair<std::string_view, E>> names) {
  std::string text;
  read_field(j, key, text);
  for (const auto& [name, value] : names) {
    if (name == text) return value;
  }
  throw Error("config key '" + std::string(key) + "' has unknown value '" + text + "'");
}

std::string_view mode_name(LogisticMode m) {
  return m == LogisticMode::kOneVsRest ? "one_vs_rest" : "multinomial";
}
std::string_view loss_name(SgdLoss l) { return l == SgdLoss::kHinge ? "hinge" : "log"; }
std::string_view distance_name(DistanceMetric d) {
  return d == DistanceMetric::kCosine ? "cosine" : "euclidean";
}

Json config_json(ClassifierKind kind, const ClassifierConfig& c) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      return Json{{"alpha", c.naive_bayes.alpha}};
    case ClassifierKind::kLogisticRegression:
      return Json{{"learning_rate", c.logistic.learning_rate},
                  {"epochs", c.logistic.epochs},
                  {"mode", mode_name(c.logistic.mode)}};
    case ClassifierKind::kLinearSvm:
      return Json{{"lambda", c.linear_svm.lambda},
                  {"learning_rate", c.linear_svm.learning_rate},
                  {"epochs", c.linear_svm.epochs}};
    case ClassifierKind::kSgdLinear:
      return Json{{"loss", loss_name(c.sgd.loss)},
                  {"learning_rate", c.sgd.learning_rate},
                  {"decay", c.sgd.decay},
                  {"epochs", c.sgd.epochs}};
    case ClassifierKind::kKnn:
      return Json{{"k", c.knn.k}, {"distance", distance_name(c.knn.distance)}};
    case ClassifierKind::kRandomForest:
      return Json{{"n_trees", c.random_forest.n_trees},
                  {"max_depth", c.random_forest.max_depth},
                  {"min_samples_split", c.random_forest.min_samples_split},
                  {"features_per_split", c.random_forest.features_per_split}};
    case ClassifierKind::kGradientBoost:
      return Json{{"rounds", c.gradient_boost.rounds},
                  {"shrinkage", c.gradient_boost.shrinkage},
                  {"tree_depth", c.gradient_boost.tree_depth}};
    case ClassifierKind::kBpn:
      return Json{{"hidden_units", c.bpn.hidden_units},
                  {"learning_rate", c.bpn.learning_rate},
                  {"epochs", c.bpn.epochs}};
  }
  throw Error("unhandled classifier kind");
}

void apply_config_key(ClassifierKind kind, const std::string& key, const Json& v,
                      ClassifierConfig& c) {
  const std::string full = std::string(kind_name(kind)) + "." + key;
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      if (key == "alpha") return read_field(v, full, c.naive_bayes.alpha);
      break;
    case ClassifierKind::kLogisticRegression:
      if (key == "learning_rate") return read_field(v, full, c.logistic.learning_rate);
      if (key == "epochs") return read_count(v, full, c.logistic.epochs);
      if (key == "mode") {
        c.logistic.mode = read_enum<LogisticMode>(
            v, full,
            {{"one_vs_rest", LogisticMode::kOneVsRest},
             {"multinomial", LogisticMode::kMultinomial}});
        return;
      }
      break;
    case ClassifierKind::kLinearSvm:
      if (key == "lambda") return read_field(v, full, c.linear_svm.lambda);
      if (key == "learning_rate") return read_field(v, full, c.linear_svm.learning_rate);
      if (key == "epochs") return read_count(v, full, c.linear_svm.epochs);
      break;
    case ClassifierKind::kSgdLinear:
      if (key == "loss") {
        c.sgd.loss = read_enum<SgdLoss>(v, full, {{"hinge", SgdLoss::kHinge},
                                                  {"log", SgdLoss::kLog}});
        return;
      }
      if (key == "learning_rate") return read_field(v, full, c.sgd.learning_rate);
      if (key == "decay") return read_field(v, full, c.sgd.decay);
      if (key == "epochs") return read_count(v, full, c.sgd.epochs);
      break;
    case ClassifierKind::kKnn:
      if (key == "k") return read_count(v, full, c.knn.k);
      if (key == "distance") {
        c.knn.distance = read_enum<DistanceMetric>(
            v, full,
            {{"cosine", DistanceMetric::kCosine}, {"euclidean", DistanceMetric::kEuclidean}});
        return;
      }
      break;
    case ClassifierKind::kRandomForest:
      if (key == "n_trees") return read_count(v, full, c.random_forest.n_trees);
      if (key == "max_depth") return read_count(v, full, c.random_forest.max_depth);
      if (key == "min_samples_split") {
        return read_count(v, full, c.random_forest.min_samples_split);
      }
      if (key == "features_per_split") {
        return read_count(v, full, c.random_forest.features_per_split);
      }
      break;
    case ClassifierKind::kGradientBoost:
      if (key == "rounds") return read_count(v, full, c.gradient_boost.rounds);
      if (key == "shrinkage") return read_field(v, full, c.gradient_boost.shrinkage);
      if (key == "tree_depth") return read_count(v, full, c.gradient_boost.tree_depth);
      break;
    case ClassifierKind::kBpn:
      if (key == "hidden_units") return read_count(v, full, c.bpn.hidden_units);
      if (key == "learning_rate") return read_field(v, full, c.bpn.learning_rate);
      if (key == "epochs") return read_count(v, full, c.bpn.epochs);
      break;
  }
  throw Error("unknown config key '" + full + "'");
}

void apply_config(ClassifierKind kind, const Json& j, ClassifierConfig& c) {
  if (!j.is_object()) throw Error("classifier config must be a JSON object");
  for (const auto& [key, value] : j.items()) apply_config_key(kind, key, value, c);
}

// ---- per-family parameters ------------------------------------------------

Json linear_output_name(LinearModel::Output o) {
  return o == LinearModel::Output::kRaw ? "raw" : "normalized_sigmoid";
}

Json parameters_json(const TrainedModel& model) {
  if (const auto* m = dynamic_cast<const NaiveBayesModel*>(&model)) {
    const auto& p = m->params();
    return Json{{"log_prior", scores_to_json(p.log_prior)},
                {"log_likelihood", p.log_likelihood}};
  }
  if (const auto* m = dynamic_cast<const LinearModel*>(&model)) {
    const auto& p = m->params();
    return Json{{"output", linear_output_name(p.output)},
                {"bias", scores_to_json(p.bias)},
                {"weights", sparse_to_json(p.weights)}};
  }
  if (const auto* m = dynamic_cast<const SoftmaxRegressionModel*>(&model)) {
    const auto& p = m->params();
    return Json{{"reference_label", label_name(label_at(kNumEmotions - 1))},
                {"bias", p.bias},
                {"weights", sparse_to_json(p.weights)}};
  }
  if (const auto* m = dynamic_cast<const KnnModel*>(&model)) {
    const auto& p = m->params();
    Json rows = Json::array();
    Json labels = Json::array();
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      rows.push_back(row_to_json(p.rows[i]));
      labels.push_back(label_name(p.labels[i]));
    }
    return Json{{"rows", rows}, {"labels", labels}};
  }
  if (const auto* m = dynamic_cast<const RandomForestModel*>(&model)) {
    Json trees = Json::array();
    for (const auto& t : m->params().trees) {
      trees.push_back(tree_to_json(t, [](Emotion e) { return Json(label_name(e)); }));
    }
    return Json{{"trees", trees}};
  }
  if (const auto* m = dynamic_cast<const GradientBoostModel*>(&model)) {
    const auto& p = m->params();
    Json trees = Json::array();
    for (const auto& t : p.trees) {
      trees.push_back(tree_to_json(t, [](double v) { return Json(v); }));
    }
    return Json{{"initial", scores_to_json(p.initial)}, {"trees", trees}};
  }
  if (const auto* m = dynamic_cast<const BpnModel*>(&model)) {
    const auto& p = m->params();
    return Json{{"hidden", p.hidden},
                {"w1", sparse_to_json(p.w1)},
                {"b1", p.b1},
                {"w2", sparse_to_json(p.w2)},
                {"b2", scores_to_json(p.b2)}};
  }
  throw Error("model type has no JSON encoding");
}

ClassifierConfig config_of(const TrainedModel& model) {
  ClassifierConfig c;
  if (const auto* m = dynamic_cast<const NaiveBayesModel*>(&model)) {
    c.naive_bayes = m->params().config;
  } else if (const auto* m = dynamic_cast<const KnnModel*>(&model)) {
    c.knn = m->params().config;
  } else if (const auto* m = dynamic_cast<const RandomForestModel*>(&model)) {
    c.random_forest = m->params().config;
  } else if (const auto* m = dynamic_cast<const GradientBoostModel*>(&model)) {
    c.gradient_boost = m->params().config;
  } else if (const auto* m = dynamic_cast<const BpnModel*>(&model)) {
    c.bpn = m->params().config;
  }
  return c;
}

// Linear families keep no training hyperparameters in their parameters, so
// only the logistic mode is recorded for them.
Json stored_config_json(const TrainedModel& model) {
  if (dynamic_cast<const SoftmaxRegressionModel*>(&model) != nullptr) {
    return Json{{"mode", mode_name(LogisticMode::kMultinomial)}};
  }
  if (dynamic_cast<const LinearModel*>(&model) != nullptr) {
    if (model.kind() == ClassifierKind::kLogisticRegression) {
      return Json{{"mode", mode_name(LogisticMode::kOneVsRest)}};
    }
    return Json::object();
  }
  return config_json(model.kind(), config_of(model));
}

std::unique_ptr<TrainedModel> build_model(ClassifierKind kind, std::size_t width,
                                          const ClassifierConfig& c, const Json& p) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes: {
      NaiveBayesModel::Params params;
      params.config = c.naive_bayes;
      params.width = width;
      params.log_prior = scores_from_json(p.at("log_prior"));
      params.log_likelihood = p.at("log_likelihood").get<std::vector<double>>();
      return std::make_unique<NaiveBayesModel>(std::move(params));
    }
    case ClassifierKind::kLogisticRegression:
      if (p.contains("reference_label")) {
        SoftmaxRegressionModel::Params params;
        params.width = width;
        params.bias = p.at("bias").get<std::array<double, SoftmaxRegressionModel::kFreeLabels>>();
        params.weights = sparse_from_json(p.at("weights"));
        return std::make_unique<SoftmaxRegressionModel>(std::move(params));
      }
      [[fallthrough]];
    case ClassifierKind::kLinearSvm:
    case ClassifierKind::kSgdLinear: {
      LinearModel::Params params;
      params.kind = kind;
      params.width = width;
      const auto output = p.at("output").get<std::string>();
      if (output == "raw") {
        params.output = LinearModel::Output::kRaw;
      } else if (output == "normalized_sigmoid") {
        params.output = LinearModel::Output::kNormalizedSigmoid;
      } else {
        throw Error("unknown linear output '" + output + "'");
      }
      params.bias = scores_from_json(p.at("bias"));
      params.weights = sparse_from_json(p.at("weights"));
      return std::make_unique<LinearModel>(std::move(params));
    }
    case ClassifierKind::kKnn: {
      KnnModel::Params params;
      params.config = c.knn;
      params.width = width;
      for (const auto& row : p.at("rows")) params.rows.push_back(row_from_json(row));
      for (const auto& label : p.at("labels")) params.labels.push_back(label_from_json(label));
      return std::make_unique<KnnModel>(std::move(params));
    }
    case ClassifierKind::kRandomForest: {
      RandomForestModel::Params params;
      params.config = c.random_forest;
      params.width = width;
      for (const auto& t : p.at("trees")) {
        params.trees.push_back(tree_from_json<Emotion>(t, label_from_json));
      }
      return std::make_unique<RandomForestModel>(std::move(params));
    }
    case ClassifierKind::kGradientBoost: {
      GradientBoostModel::Params params;
      params.config = c.gradient_boost;
      params.width = width;
      params.initial = scores_from_json(p.at("initial"));
      for (const auto& t : p.at("trees")) {
        params.trees.push_back(
            tree_from_json<double>(t, [](const Json& v) { return v.get<double>(); }));
      }
      return std::make_unique<GradientBoostModel>(std::move(params));
    }
    case ClassifierKind::kBpn: {
      BpnParams params;
      params.config = c.bpn;
      params.width = width;
      params.hidden = p.at("hidden").get<std::size_t>();
      params.w1 = sparse_from_json(p.at("w1"));
      params.b1 = p.at("b1").get<std::vector<double>>();
      params.w2 = sparse_from_json(p.at("w2"));
      params.b2 = scores_from_json(p.at("b2"));
      return std::make_unique<BpnModel>(std::move(params));
    }
  }
  throw Error("unhandled classifier kind");
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
  Json labels = Json::array();
  for (const auto e : kAllEmotions) labels.push_back(label_name(e));
  Json doc{{"format", kFormatName},
           {"version", kModelFormatVersion},
           {"kind", kind_name(model.kind())},
           {"labels", labels},
           {"width", model.width()},
           {"config", stored_config_json(model)},
           {"parameters", parameters_json(model)}};
  return doc.dump();
}

std::unique_ptr<TrainedModel> model_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    if (doc.at("format").get<std::string>() != kFormatName) {
      throw Error("not an emotext model document");
    }
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error("unsupported model format version " + std::to_string(version));
    }
    const auto& labels = doc.at("labels");
    if (labels.size() != kNumEmotions) throw Error("model label list has the wrong length");
    for (std::size_t l = 0; l < kNumEmotions; ++l) {
      if (labels[l].get<std::string>() != label_name(label_at(l))) {
        throw Error("model label order differs from the fixed label order");
      }
    }
    const ClassifierKind kind = parse_kind(doc.at("kind").get<std::string>());
    ClassifierConfig config;
    apply_config(kind, doc.at("config"), config);
    return build_model(kind, doc.at("width").get<std::size_t>(), config,
                       doc.at("parameters"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed model document: ") + e.what());
  }
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << model_to_json(model) << '\n';
  if (!out) throw Error("failed to write '" + path.string() + "'");
}

std::unique_ptr<TrainedModel> load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

std::string config_to_json(ClassifierKind kind, const ClassifierConfig& config) {
  return config_json(kind, config).dump();
}

void config_from_json(ClassifierKind kind, std::string_view text, ClassifierConfig& config) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed classifier config: ") + e.what());
  }
  apply_config(kind, j, config);
}

}  // namespace emotext
