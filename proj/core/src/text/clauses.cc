// Copyright 2026 The Corn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corn/text/clauses.h"

#include "corn/text/utf8.h"

namespace corn::text {

const DelimiterSet& DefaultClauseDelimiters() {
  static const DelimiterSet* const kDelimiters =
      new DelimiterSet{",", ";", "and", "but", "however"};
  return *kDelimiters;
}

bool IsDelimiter(std::string_view token, const DelimiterSet& delimiters) {
  return delimiters.find(AsciiLower(token)) != delimiters.end();
}

Clause MakeClause(const TokenizedSentence& sentence, size_t start, size_t end,
                  const DelimiterSet& delimiters) {
  Clause clause{sentence.sentence_id, start, end, {}};
  auto is_edge = [&](size_t i) {
    const std::string& t = sentence.tokens[i].text;
    return IsDelimiter(t, delimiters) || IsPunctuationToken(t);
  };
  size_t first = start;
  size_t last = end;
  while (first < last && is_edge(first)) ++first;
  while (last > first && is_edge(last - 1)) --last;
  if (first == last) {
    first = start;
    last = end;
  }
  clause.text = std::string(sentence.Slice(first, last));
  return clause;
}

std::vector<Clause> SegmentClauses(const TokenizedSentence& sentence,
                                   const DelimiterSet& delimiters) {
  std::vector<Clause> clauses;
  size_t start = 0;
  size_t content = 0;  // non-delimiter tokens in the open clause
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (IsDelimiter(sentence.tokens[i].text, delimiters)) {
      if (content > 0) clauses.push_back(MakeClause(sentence, start, i + 1, delimiters));
      start = i + 1;
      content = 0;
    } else {
      ++content;
    }
  }
  if (content > 0) {
    clauses.push_back(MakeClause(sentence, start, sentence.size(), delimiters));
  }
  return clauses;
}

}  // namespace corn::text
