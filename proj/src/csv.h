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

// RFC-4180 record reader/writer shared by the corpus loaders.

#ifndef EMOTEXT_SRC_CSV_H_
#define EMOTEXT_SRC_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace emotext::csv {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line on which the record starts
};

// Splits `text` into records. Quoted fields may contain delimiters, doubled
// quotes and line breaks. Blank lines are skipped. A leading UTF-8 BOM is
// ignored. Throws emotext::Error on an unterminated quote.
std::vector<Record> parse(std::string_view text, char delimiter);

// Picks the delimiter among '|', ',' and TAB that occurs most often outside
// quotes on the first non-blank line. Ties prefer '|', then TAB, then ','.
char detect_delimiter(std::string_view text);

// Quotes the field when it contains the delimiter, a quote or a line break.
std::string escape(std::string_view field, char delimiter = ',');

}  // namespace emotext::csv

#endif  // EMOTEXT_SRC_CSV_H_
