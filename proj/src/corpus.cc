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

#include "emotext/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "csv.h"
#include "emotext/random.h"

namespace emotext {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("error reading " + path.string());
  return buffer.str();
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size() && extra > 0) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

// ISEAR exports are frequently Windows-1252/Latin-1; bytes are reinterpreted
// as Latin-1 code points when the field is not valid UTF-8.
std::string to_utf8(std::string_view s) {
  if (is_valid_utf8(s)) return std::string(s);
  std::string out;
  out.reserve(s.size() * 2);
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 0x80) {
      out.push_back(ch);
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (const char c : trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Raw ISEAR categories. Numeric codes follow the EMOT column of the databank.
enum class RawLabel { kInScope, kOutOfScope, kUnknown };

struct RawLabelResult {
  RawLabel kind = RawLabel::kUnknown;
  Emotion label = Emotion::kJoy;
};

RawLabelResult classify_raw_label(std::string_view raw) {
  const std::string value = lowercase_ascii(trim(raw));
  if (const auto e = parse_label(value)) return {RawLabel::kInScope, *e};
  if (value == "anger" || value == "disgust") return {RawLabel::kOutOfScope};
  static constexpr std::array<std::optional<Emotion>, 7> kCodes = {
      Emotion::kJoy,   Emotion::kFear,  std::nullopt,   Emotion::kSadness,
      std::nullopt,    Emotion::kShame, Emotion::kGuilt};
  if (value.size() == 1 && value[0] >= '1' && value[0] <= '7') {
    const auto& code = kCodes[static_cast<std::size_t>(value[0] - '1')];
    if (code) return {RawLabel::kInScope, *code};
    return {RawLabel::kOutOfScope};
  }
  return {};
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       std::initializer_list<std::string_view> names) {
  for (const std::string_view name : names) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (lowercase_ascii(trim(header[i])) == name) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

Corpus::Corpus(std::vector<Review> reviews) : reviews_(std::move(reviews)) {
  if (reviews_.empty()) throw Error("corpus is empty");
  for (std::size_t i = 0; i < reviews_.size(); ++i) {
    if (trim(reviews_[i].text).empty()) {
      throw Error("review " + std::to_string(reviews_[i].id) + " has empty text");
    }
    if (i > 0 && reviews_[i].id <= reviews_[i - 1].id) {
      throw Error("review ids must be strictly increasing (id " +
                  std::to_string(reviews_[i].id) + ")");
    }
  }
}

Corpus Corpus::from_pairs(const std::vector<std::pair<Emotion, std::string>>& rows) {
  std::vector<Review> reviews;
  reviews.reserve(rows.size());
  for (const auto& [label, text] : rows) {
    reviews.push_back(Review{reviews.size(), text, label});
  }
  return Corpus(std::move(reviews));
}

std::vector<Emotion> Corpus::labels() const {
  std::vector<Emotion> out;
  out.reserve(reviews_.size());
  for (const auto& r : reviews_) out.push_back(r.label);
  return out;
}

Corpus parse_corpus(std::string_view csv_text) {
  const auto records = csv::parse(csv_text, ',');
  if (records.empty()) throw Error("corpus file is empty (missing header)");
  const auto& header = records.front().fields;
  if (header.size() != 2 || lowercase_ascii(trim(header[0])) != "label" ||
      lowercase_ascii(trim(header[1])) != "text") {
    throw Error("corpus header must be `label,text`");
  }
  if (records.size() == 1) throw Error("corpus file has no data rows");

  std::vector<Review> reviews;
  reviews.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where =
        "row " + std::to_string(r) + " (line " + std::to_string(rec.line) + ")";
    if (rec.fields.size() != 2) {
      throw Error("malformed " + where + ": expected 2 columns, found " +
                  std::to_string(rec.fields.size()));
    }
    const auto label = parse_label(trim(rec.fields[0]));
    if (!label) {
      throw Error("unknown label '" + rec.fields[0] + "' in " + where);
    }
    if (trim(rec.fields[1]).empty()) throw Error("empty text in " + where);
    reviews.push_back(Review{reviews.size(), rec.fields[1], *label});
  }
  return Corpus(std::move(reviews));
}

Corpus load_corpus(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error("corpus file not found: " + path.string());
  }
  try {
    return parse_corpus(read_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << "label,text\n";
  for (const auto& r : corpus.reviews()) {
    out << label_name(r.label) << ',' << csv::escape(r.text) << '\n';
  }
}

void save_corpus(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_corpus(out, corpus);
  if (!out) throw Error("error writing " + path.string());
}

Corpus convert_isear_text(std::string_view raw_text) {
  const char delimiter = csv::detect_delimiter(raw_text);
  const auto records = csv::parse(raw_text, delimiter);
  if (records.empty()) throw Error("ISEAR input is empty");

  std::size_t label_col = 0;
  std::size_t text_col = 1;
  std::size_t first_data = 0;
  const auto& header = records.front().fields;
  const auto named_label =
      find_column(header, {"field1", "emotion", "label", "class", "emot"});
  const auto named_text =
      find_column(header, {"sit", "text", "sentence", "content", "situation"});
  if (named_label && named_text) {
    label_col = *named_label;
    text_col = *named_text;
    first_data = 1;
  } else if (header.size() >= 2 &&
             classify_raw_label(header[0]).kind == RawLabel::kUnknown &&
             classify_raw_label(header[1]).kind != RawLabel::kUnknown) {
    // Headerless `text,label` layout.
    label_col = 1;
    text_col = 0;
  }

  std::vector<std::pair<Emotion, std::string>> rows;
  for (std::size_t r = first_data; r < records.size(); ++r) {
    const auto& fields = records[r].fields;
    if (fields.size() <= std::max(label_col, text_col)) continue;
    const auto raw = classify_raw_label(fields[label_col]);
    if (raw.kind != RawLabel::kInScope) continue;
    std::string text = collapse_whitespace(to_utf8(fields[text_col]));
    if (text.empty()) continue;
    rows.emplace_back(raw.label, std::move(text));
  }
  if (rows.empty()) throw Error("ISEAR input contains no joy/fear/sadness/shame/guilt rows");
  return Corpus::from_pairs(rows);
}

std::size_t convert_isear(const std::filesystem::path& raw_path,
                          const std::filesystem::path& out_path) {
  const Corpus corpus = convert_isear_text(read_file(raw_path));
  save_corpus(out_path, corpus);
  return corpus.size();
}

LabelHistogram label_histogram(const Corpus& corpus) {
  LabelHistogram counts{};
  for (const auto& r : corpus.reviews()) ++counts[label_index(r.label)];
  return counts;
}

std::size_t test_set_size(std::size_t n, double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("test fraction must lie in (0, 1)");
  }
  if (n < 2) throw Error("splitting needs at least 2 rows");
  const auto rounded =
      static_cast<std::size_t>(std::floor(test_fraction * static_cast<double>(n) + 0.5));
  return std::clamp<std::size_t>(rounded, 1, n - 1);
}

SplitPlan split(std::size_t n, double test_fraction, std::uint64_t seed) {
  const std::size_t test_size = test_set_size(n, test_fraction);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates: the first test_size slots become a uniform sample.
  for (std::size_t i = 0; i < test_size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
    std::swap(order[i], order[j]);
  }
  SplitPlan plan;
  plan.seed = seed;
  plan.test_fraction = test_fraction;
  plan.test_indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(test_size));
  plan.train_indices.assign(order.begin() + static_cast<std::ptrdiff_t>(test_size), order.end());
  std::sort(plan.test_indices.begin(), plan.test_indices.end());
  std::sort(plan.train_indices.begin(), plan.train_indices.end());
  return plan;
}

SplitPlan split(const Corpus& corpus, double test_fraction, std::uint64_t seed) {
  return split(corpus.size(), test_fraction, seed);
}

SplitPlan stratified_split(const std::vector<Emotion>& labels,
                           double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("test fraction must lie in (0, 1)");
  }
  if (labels.size() < 2) throw Error("splitting needs at least 2 rows");
  SplitPlan plan;
  plan.seed = seed;
  plan.test_fraction = test_fraction;
  for (std::size_t l = 0; l < kNumEmotions; ++l) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (label_index(labels[i]) == l) members.push_back(i);
    }
    if (members.empty()) continue;
    if (members.size() == 1) {
      plan.train_indices.push_back(members.front());
      continue;
    }
    const SplitPlan local = split(members.size(), test_fraction, splitmix64(seed) ^ l);
    for (const auto i : local.test_indices) plan.test_indices.push_back(members[i]);
    for (const auto i : local.train_indices) plan.train_indices.push_back(members[i]);
  }
  if (plan.test_indices.empty()) throw Error("stratified split produced an empty test set");
  std::sort(plan.test_indices.begin(), plan.test_indices.end());
  std::sort(plan.train_indices.begin(), plan.train_indices.end());
  return plan;
}

std::vector<SplitPlan> kfold_split(std::size_t n, std::size_t folds,
                                   std::uint64_t seed) {
  if (folds < 2 || folds > n) {
    throw Error("fold count must lie in [2, " + std::to_string(n) + "]");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));

  std::vector<SplitPlan> plans(folds);
  std::size_t begin = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t size = n / folds + (f < n % folds ? 1 : 0);
    auto& plan = plans[f];
    plan.seed = seed;
    plan.test_fraction = static_cast<double>(size) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= begin && i < begin + size) {
        plan.test_indices.push_back(order[i]);
      } else {
        plan.train_indices.push_back(order[i]);
      }
    }
    std::sort(plan.test_indices.begin(), plan.test_indices.end());
    std::sort(plan.train_indices.begin(), plan.train_indices.end());
    begin += size;
  }
  return plans;
}

}  // namespace emotext
