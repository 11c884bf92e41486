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

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "emotext/parallel.h"

namespace emotext {

// Generated from data/stopwords_en.txt at configure time.
extern const char kDefaultStopWordsText[];

namespace {

// A decoded code point and its byte range in the source string. Ill-formed
// sequences decode to a negative value and are treated as ordinary letters.
struct CodePoint {
  UChar32 value;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    out.push_back({c, static_cast<std::size_t>(begin), static_cast<std::size_t>(i)});
  }
  return out;
}

bool is_punct(UChar32 c) { return c >= 0 && u_ispunct(c); }

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const auto& cp : decode(s)) {
    if (cp.value < 0) {
      out.append(s.substr(cp.begin, cp.end - cp.begin));
      continue;
    }
    const UChar32 lower = u_tolower(cp.value);
    char buffer[U8_MAX_LENGTH];
    int32_t n = 0;
    U8_APPEND_UNSAFE(buffer, n, lower);
    out.append(buffer, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace

StopWordList::StopWordList(std::span<const std::string> words) {
  for (const auto& raw : words) {
    std::string word = strip_punctuation(lowercase(raw));
    if (word.empty()) continue;
    for (const auto& cp : decode(word)) {
      if (is_punct(cp.value) || is_space(cp.value)) {
        throw Error("stop word '" + raw + "' contains punctuation or whitespace");
      }
    }
    words_.insert(std::move(word));
  }
  if (words_.empty()) throw Error("stop-word list is empty");
}

const StopWordList& StopWordList::default_english() {
  static const StopWordList list = parse_stop_words(kDefaultStopWordsText);
  return list;
}

std::vector<std::string> StopWordList::sorted_words() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

StopWordList parse_stop_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto& token : tokenize(line)) words.push_back(std::move(token));
  }
  return StopWordList(words);
}

StopWordList load_stop_words(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stop-word file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_stop_words(buffer.str());
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  bool in_token = false;
  for (const auto& cp : decode(text)) {
    if (is_space(cp.value)) {
      if (in_token) tokens.push_back(lowercase(text.substr(start, cp.begin - start)));
      in_token = false;
    } else if (!in_token) {
      start = cp.begin;
      in_token = true;
    }
  }
  if (in_token) tokens.push_back(lowercase(text.substr(start)));
  return tokens;
}

std::string strip_punctuation(std::string_view token) {
  const auto cps = decode(token);
  std::size_t first = 0;
  std::size_t last = cps.size();
  while (first < last && is_punct(cps[first].value)) ++first;
  while (last > first && is_punct(cps[last - 1].value)) --last;
  if (first == last) return {};
  return std::string(token.substr(cps[first].begin, cps[last - 1].end - cps[first].begin));
}

std::vector<std::string> remove_stop_words(std::span<const std::string> tokens,
                                           const StopWordList& stop) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stop.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> preprocess_text(std::string_view text,
                                         const StopWordList& stop) {
  std::vector<std::string> out;
  for (const auto& raw : tokenize(text)) {
    std::string token = strip_punctuation(raw);
    if (!token.empty() && !stop.contains(token)) out.push_back(std::move(token));
  }
  return out;
}

std::vector<TokenizedReview> preprocess_corpus(const Corpus& corpus,
                                               const StopWordList& stop) {
  std::vector<TokenizedReview> out(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Review& r = corpus[i];
    out[i] = TokenizedReview{r.id, preprocess_text(r.text, stop), r.label};
  });
  return out;
}

}  // namespace emotext
