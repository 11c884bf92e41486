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
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csv.h"
#include "emotext/labels.h"
#include "emotext/parallel.h"
#include "emotext/random.h"
#include "gtest/gtest.h"

namespace emotext {
namespace {

std::filesystem::path WriteTemp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::string ErrorOf(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(LabelsTest, NamesRoundTrip) {
  for (const Emotion e : kAllEmotions) {
    EXPECT_EQ(parse_label(label_name(e)), e);
    EXPECT_EQ(parse_label(label_display_name(e)), e);
  }
  EXPECT_EQ(label_name(Emotion::kSadness), "sadness");
  EXPECT_EQ(label_display_name(Emotion::kGuilt), "Guilt");
  EXPECT_EQ(parse_label("GUILT"), Emotion::kGuilt);
  EXPECT_FALSE(parse_label("anger").has_value());
  EXPECT_FALSE(parse_label("").has_value());
}

TEST(LabelsTest, ArgmaxPrefersEarliestLabel) {
  EXPECT_EQ(argmax_label({0.2, 0.2, 0.2, 0.2, 0.2}), 0u);
  EXPECT_EQ(argmax_label({0.1, 0.3, 0.3, 0.2, 0.1}), 1u);
  EXPECT_EQ(argmax_label({-5, -4, -3, -2, -1}), 4u);
}

TEST(RandomTest, SameSeedSameStream) {
  Rng a(7);
  Rng b(7);
  Rng c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(RandomTest, MatchesStandardEngine) {
  // Reference value of the SplitMix64 generator's first output from state 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  Rng rng(5489);
  std::mt19937_64 engine(splitmix64(5489));
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.next_u64(), engine());
}

TEST(RandomTest, BoundedDrawsStayInRange) {
  Rng rng(1);
  std::array<int, 7> seen{};
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform_below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
    const double u = rng.uniform_unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (const int count : seen) EXPECT_GT(count, 800);
}

TEST(RandomTest, SubstreamsAreKeyed) {
  auto a = Rng::substream(3, 0);
  auto b = Rng::substream(3, 1);
  auto c = Rng::substream(3, 0);
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_EQ(x, c.next_u64());
}

TEST(RandomTest, ShuffleIsPermutation) {
  std::vector<int> items(50);
  std::iota(items.begin(), items.end(), 0);
  Rng rng(11);
  rng.shuffle(std::span<int>(items));
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(ParallelTest, VisitsEveryIndexOnce) {
  const std::size_t saved = max_threads();
  for (const std::size_t threads : {1u, 3u, 8u}) {
    set_max_threads(threads);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  set_max_threads(saved);
}

TEST(ParallelTest, RethrowsWorkerErrors) {
  EXPECT_THROW(parallel_for(100,
                            [](std::size_t i) {
                              if (i == 57) throw Error("boom");
                            }),
               Error);
}

TEST(CsvTest, QuotedFields) {
  const auto records = csv::parse("a,b\n\"x, y\",\"say \"\"hi\"\"\nthere\"\n\n1,2\n", ',');
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[1].fields[0], "x, y");
  EXPECT_EQ(records[1].fields[1], "say \"hi\"\nthere");
  EXPECT_EQ(records[1].line, 2u);
  EXPECT_EQ(records[2].line, 5u);
}

TEST(CsvTest, BomAndCrlf) {
  const auto records = csv::parse("\xEF\xBB\xBFlabel,text\r\njoy,ok\r\n", ',');
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].fields[0], "label");
  EXPECT_EQ(records[1].fields[1], "ok");
}

TEST(CsvTest, UnterminatedQuoteThrows) {
  EXPECT_THROW(csv::parse("a,\"open\n", ','), Error);
}

TEST(CsvTest, DelimiterDetection) {
  EXPECT_EQ(csv::detect_delimiter("a|b|c\n"), '|');
  EXPECT_EQ(csv::detect_delimiter("a\tb\n"), '\t');
  EXPECT_EQ(csv::detect_delimiter("a,b\n"), ',');
  EXPECT_EQ(csv::detect_delimiter("\"x|y\",b\n"), ',');
}

TEST(CsvTest, EscapeRoundTrip) {
  for (const std::string field : {"plain", "with,comma", "say \"hi\"", "two\nlines"}) {
    const auto records = csv::parse(csv::escape(field) + "\n", ',');
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].fields[0], field);
  }
  EXPECT_EQ(csv::escape("plain"), "plain");
}

TEST(CorpusTest, ParsesTwoRows) {
  const Corpus corpus = parse_corpus("label,text\njoy,\"I passed\"\nfear,\"I froze\"\n");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].label, Emotion::kJoy);
  EXPECT_EQ(corpus[0].text, "I passed");
  EXPECT_EQ(corpus[1].label, Emotion::kFear);
  EXPECT_EQ(corpus[1].id, 1u);
}

TEST(CorpusTest, UnknownLabelNamesRow) {
  const std::string message = ErrorOf(
      [] { parse_corpus("label,text\njoy,fine\nanger,\"not in scope\"\n"); });
  EXPECT_NE(message.find("anger"), std::string::npos) << message;
  EXPECT_NE(message.find("row 2"), std::string::npos) << message;
}

TEST(CorpusTest, MalformedInputs) {
  EXPECT_THROW(parse_corpus(""), Error);
  EXPECT_THROW(parse_corpus("label,text\n"), Error);
  EXPECT_THROW(parse_corpus("text,label\njoy,x\n"), Error);
  EXPECT_THROW(parse_corpus("label,text\njoy\n"), Error);
  EXPECT_THROW(parse_corpus("label,text\njoy,a,b\n"), Error);
  EXPECT_THROW(parse_corpus("label,text\njoy,\"   \"\n"), Error);
  EXPECT_THROW(Corpus({}), Error);
  EXPECT_THROW(Corpus({{2, "a", Emotion::kJoy}, {1, "b", Emotion::kJoy}}), Error);
}

TEST(CorpusTest, LoadReportsPath) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus.csv"), Error);
  const auto path = WriteTemp("bad_corpus.csv", "label,text\nrage,x\n");
  const std::string message = ErrorOf([&] { load_corpus(path); });
  EXPECT_NE(message.find(path.string()), std::string::npos);
}

TEST(CorpusTest, SaveLoadRoundTrip) {
  const Corpus corpus = Corpus::from_pairs({{Emotion::kShame, "quote \" and, comma"},
                                            {Emotion::kGuilt, "multi\nline"},
                                            {Emotion::kJoy, "plain"}});
  const auto path = std::filesystem::path(::testing::TempDir()) / "roundtrip.csv";
  save_corpus(path, corpus);
  const Corpus loaded = load_corpus(path);
  EXPECT_EQ(loaded.reviews(), corpus.reviews());
  const auto hist = label_histogram(loaded);
  EXPECT_EQ(std::accumulate(hist.begin(), hist.end(), std::size_t{0}), loaded.size());
}

TEST(CorpusTest, Histogram) {
  const Corpus corpus = Corpus::from_pairs({{Emotion::kJoy, "a"},
                                            {Emotion::kFear, "b"},
                                            {Emotion::kJoy, "c"},
                                            {Emotion::kJoy, "d"}});
  const LabelHistogram expected = {3, 1, 0, 0, 0};
  EXPECT_EQ(label_histogram(corpus), expected);
}

TEST(ConvertIsearTest, KeepsFiveLabels) {
  const Corpus corpus = convert_isear_text(
      "EMOT|SIT\n1|happy day\n2|dark night\n3|angry\n4|sad news\n5|gross\n"
      "6|embarrassed\n7|my fault\n");
  ASSERT_EQ(corpus.size(), 5u);
  const LabelHistogram expected = {1, 1, 1, 1, 1};
  EXPECT_EQ(label_histogram(corpus), expected);
  EXPECT_EQ(corpus[2].text, "sad news");
}

TEST(ConvertIsearTest, NamedLabelsAndWhitespace) {
  const Corpus corpus = convert_isear_text(
      "text,emotion\n\"  a   b\nc \",Joy\nx,disgust\ny,guilt\n");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].text, "a b c");
  EXPECT_EQ(corpus[1].label, Emotion::kGuilt);
}

TEST(ConvertIsearTest, Latin1IsTranscoded) {
  const Corpus corpus = convert_isear_text("EMOT|SIT\n1|caf\xE9\n");
  EXPECT_EQ(corpus[0].text, "caf\xC3\xA9");
}

TEST(ConvertIsearTest, NothingInScopeThrows) {
  EXPECT_THROW(convert_isear_text("EMOT|SIT\n3|angry\n5|gross\n"), Error);
}

TEST(ConvertIsearTest, WritesFile) {
  const auto raw = WriteTemp("raw_isear.txt", "EMOT\tSIT\n1\tgood\n3\tbad\n7\tsorry\n");
  const auto out = std::filesystem::path(::testing::TempDir()) / "converted.csv";
  EXPECT_EQ(convert_isear(raw, out), 2u);
  EXPECT_EQ(load_corpus(out).size(), 2u);
}

TEST(SplitTest, TestSetSize) {
  EXPECT_EQ(test_set_size(10, 0.2), 2u);
  EXPECT_EQ(test_set_size(5477, 0.2), 1095u);  // 1095.4 rounds down
  EXPECT_EQ(test_set_size(5, 0.1), 1u);         // 0.5 rounds half up
  EXPECT_EQ(test_set_size(2, 0.01), 1u);
  EXPECT_EQ(test_set_size(2, 0.99), 1u);
  EXPECT_THROW(test_set_size(1, 0.2), Error);
  EXPECT_THROW(test_set_size(10, 0.0), Error);
  EXPECT_THROW(test_set_size(10, 1.0), Error);
}

TEST(SplitTest, TenRows) {
  const SplitPlan plan = split(10, 0.2, 123);
  EXPECT_EQ(plan.test_indices.size(), 2u);
  EXPECT_EQ(plan.train_indices.size(), 8u);
  EXPECT_EQ(plan, split(10, 0.2, 123));
}

TEST(SplitTest, PartitionProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(999);
    const double fraction = rng.uniform(0.01, 0.99);
    const SplitPlan plan = split(n, fraction, rng.next_u64());
    ASSERT_EQ(plan.test_indices.size(), test_set_size(n, fraction));
    ASSERT_TRUE(std::is_sorted(plan.test_indices.begin(), plan.test_indices.end()));
    ASSERT_TRUE(std::is_sorted(plan.train_indices.begin(), plan.train_indices.end()));
    std::vector<std::size_t> all = plan.test_indices;
    all.insert(all.end(), plan.train_indices.begin(), plan.train_indices.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(all[i], i);
  }
}

TEST(SplitTest, DeterministicAndSeedSensitive) {
  std::set<std::vector<std::size_t>> distinct;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SplitPlan plan = split(5477, 0.2, seed);
    ASSERT_EQ(plan, split(5477, 0.2, seed));
    distinct.insert(plan.test_indices);
  }
  EXPECT_EQ(distinct.size(), 100u);
}

TEST(SplitTest, CorpusOverload) {
  const Corpus corpus = Corpus::from_pairs({{Emotion::kJoy, "a"}, {Emotion::kFear, "b"},
                                            {Emotion::kJoy, "c"}, {Emotion::kFear, "d"},
                                            {Emotion::kJoy, "e"}});
  EXPECT_EQ(split(corpus, 0.2, 4), split(5, 0.2, 4));
}

TEST(SplitTest, Stratified) {
  std::vector<Emotion> labels;
  for (std::size_t i = 0; i < 100; ++i) labels.push_back(label_at(i % 5));
  labels.push_back(Emotion::kJoy);  // Joy has 21 rows
  const SplitPlan plan = stratified_split(labels, 0.2, 5);
  std::array<std::size_t, kNumEmotions> per_label{};
  for (const auto i : plan.test_indices) ++per_label[label_index(labels[i])];
  EXPECT_EQ(per_label[0], 4u);  // round(4.2)
  for (std::size_t l = 1; l < kNumEmotions; ++l) EXPECT_EQ(per_label[l], 4u);
  EXPECT_EQ(plan.test_indices.size() + plan.train_indices.size(), labels.size());
  EXPECT_EQ(plan, stratified_split(labels, 0.2, 5));
}

TEST(SplitTest, StratifiedSingletonStaysInTraining) {
  const std::vector<Emotion> labels = {Emotion::kJoy, Emotion::kJoy, Emotion::kFear};
  const SplitPlan plan = stratified_split(labels, 0.5, 1);
  EXPECT_EQ(plan.test_indices.size(), 1u);
  EXPECT_NE(std::find(plan.train_indices.begin(), plan.train_indices.end(), 2u),
            plan.train_indices.end());
}

TEST(SplitTest, KFoldPartitions) {
  for (const std::size_t n : {10u, 11u, 37u}) {
    const auto plans = kfold_split(n, 4, 9);
    ASSERT_EQ(plans.size(), 4u);
    std::vector<int> covered(n, 0);
    std::size_t smallest = n;
    std::size_t largest = 0;
    for (const auto& plan : plans) {
      EXPECT_EQ(plan.test_indices.size() + plan.train_indices.size(), n);
      for (const auto i : plan.test_indices) ++covered[i];
      smallest = std::min(smallest, plan.test_indices.size());
      largest = std::max(largest, plan.test_indices.size());
    }
    for (const int c : covered) EXPECT_EQ(c, 1);
    EXPECT_LE(largest - smallest, 1u);
  }
  EXPECT_THROW(kfold_split(5, 1, 0), Error);
  EXPECT_THROW(kfold_split(5, 6, 0), Error);
}

}  // namespace
}  // namespace emotext
