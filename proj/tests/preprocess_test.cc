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

#include "emotext/preprocess.h"

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace emotext {
namespace {

using Tokens = std::vector<std::string>;

const StopWordList& Default() { return StopWordList::default_english(); }

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(tokenize("He was holding on tightly"),
            (Tokens{"he", "was", "holding", "on", "tightly"}));
  EXPECT_EQ(tokenize(""), Tokens{});
  EXPECT_EQ(tokenize("  two   spaces "), (Tokens{"two", "spaces"}));
  EXPECT_EQ(tokenize("tab\tand\nnewline"), (Tokens{"tab", "and", "newline"}));
}

TEST(TokenizeTest, UnicodeWhitespaceAndCase) {
  // U+00A0 no-break space and U+2003 em space separate tokens.
  EXPECT_EQ(tokenize("caf\xC3\x89\xC2\xA0NA\xC3\x8FVE\xE2\x80\x83x"),
            (Tokens{"caf\xC3\xA9", "na\xC3\xafve", "x"}));
}

TEST(StripPunctuationTest, Examples) {
  EXPECT_EQ(strip_punctuation("tightly."), "tightly");
  EXPECT_EQ(strip_punctuation("!!!"), "");
  EXPECT_EQ(strip_punctuation("one's"), "one's");
  EXPECT_EQ(strip_punctuation("\"(end-of-term)\","), "end-of-term");
  EXPECT_EQ(strip_punctuation("\xC2\xBFqu\xC3\xA9?"), "qu\xC3\xA9");  // inverted question mark
  EXPECT_EQ(strip_punctuation("\xE2\x80\x9Cquoted\xE2\x80\x9D"), "quoted");
  EXPECT_EQ(strip_punctuation(""), "");
}

TEST(StopWordsTest, DefaultListContainsCommonWords) {
  for (const char* word : {"a", "the", "am", "this", "that", "is", "was", "by"}) {
    EXPECT_TRUE(Default().contains(word)) << word;
  }
  EXPECT_GE(Default().size(), 150u);
  EXPECT_LE(Default().size(), 200u);
  EXPECT_FALSE(Default().contains("holding"));
}

TEST(StopWordsTest, ParseAndNormalize) {
  const StopWordList list = parse_stop_words("# comment\nThe\n  and  # trailing\n\n\"or\"\n");
  EXPECT_EQ(list.sorted_words(), (Tokens{"and", "or", "the"}));
  EXPECT_THROW(parse_stop_words("# nothing\n"), Error);
  EXPECT_THROW(parse_stop_words("don't\n"), Error);
}

TEST(StopWordsTest, LoadFromFile) {
  const auto path = std::filesystem::path(::testing::TempDir()) / "stop.txt";
  std::ofstream(path) << "foo\nbar\n";
  EXPECT_EQ(load_stop_words(path).size(), 2u);
  EXPECT_THROW(load_stop_words("/nonexistent/stop.txt"), Error);
}

TEST(RemoveStopWordsTest, Examples) {
  const std::vector<std::string> words = {"he", "was"};
  const StopWordList stop(words);
  EXPECT_EQ(remove_stop_words(Tokens{"he", "was", "holding"}, stop), Tokens{"holding"});
  EXPECT_EQ(remove_stop_words(Tokens{}, stop), Tokens{});
  EXPECT_EQ(remove_stop_words(Tokens{"a", "the", "am"}, Default()), Tokens{});
}

TEST(PreprocessTest, Pipeline) {
  EXPECT_EQ(preprocess_text("He was holding on TIGHTLY.", Default()),
            (Tokens{"holding", "tightly"}));
  EXPECT_EQ(preprocess_text("The!!! a", Default()), Tokens{});
}

TEST(PreprocessTest, Idempotent) {
  const std::string text = "I felt \"ashamed\" -- really, really ashamed... of myself!";
  const Tokens once = preprocess_text(text, Default());
  std::string joined;
  for (const auto& t : once) joined += t + " ";
  EXPECT_EQ(preprocess_text(joined, Default()), once);
}

TEST(PreprocessTest, TrainingSampleRow) {
  const std::string text =
      "(33) My 2 year old son climbed up and sat on the 7th floor balcony with his legs "
      "hanging out. He was holding on tightly to the upper railing of the balcony but he "
      "could have easily lost his balance when he sat down.";
  const Tokens tokens = preprocess_text(text, Default());
  ASSERT_FALSE(tokens.empty());
  for (const auto& t : tokens) {
    EXPECT_FALSE(Default().contains(t)) << t;
    EXPECT_EQ(strip_punctuation(t), t);
    EXPECT_EQ(tokenize(t), Tokens{t});
  }
  for (const char* kept : {"climbed", "balcony", "tightly", "railing", "balance"}) {
    EXPECT_NE(std::find(tokens.begin(), tokens.end(), kept), tokens.end()) << kept;
  }
  EXPECT_EQ(std::count(tokens.begin(), tokens.end(), "balcony"), 2);
}

TEST(PreprocessTest, CorpusKeepsEmptyReviews) {
  const Corpus corpus =
      Corpus({{4, "The!!! a", Emotion::kShame}, {9, "Lost my keys", Emotion::kGuilt}});
  const auto docs = preprocess_corpus(corpus, Default());
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].id, 4u);
  EXPECT_TRUE(docs[0].tokens.empty());
  EXPECT_EQ(docs[0].label, Emotion::kShame);
  EXPECT_EQ(docs[1].id, 9u);
  EXPECT_EQ(docs[1].tokens, (Tokens{"lost", "keys"}));
}

}  // namespace
}  // namespace emotext
