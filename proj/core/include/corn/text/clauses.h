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

#ifndef CORN_TEXT_CLAUSES_H_
#define CORN_TEXT_CLAUSES_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corn/text/tokenizer.h"

namespace corn::text {

// Lowercase delimiter tokens.
using DelimiterSet = std::set<std::string, std::less<>>;

// {",", ";", "and", "but", "however"}.
const DelimiterSet& DefaultClauseDelimiters();

// A clause covers tokens [start, end) of its sentence, trailing delimiter
// included. `text` is the raw slice with edge delimiters and punctuation
// trimmed, which is what premises and hypotheses are built from.
struct Clause {
  std::string sentence_id;
  size_t start = 0;
  size_t end = 0;
  std::string text;

  size_t length() const { return end - start; }
};

bool IsDelimiter(std::string_view token, const DelimiterSet& delimiters);

// Partitions the token sequence at delimiter tokens (matched
// case-insensitively). A delimiter closes the clause it follows; clauses
// made only of delimiters are dropped.
std::vector<Clause> SegmentClauses(
    const TokenizedSentence& sentence,
    const DelimiterSet& delimiters = DefaultClauseDelimiters());

// Clause for an explicit token range, with the same text trimming rule.
Clause MakeClause(const TokenizedSentence& sentence, size_t start, size_t end,
                  const DelimiterSet& delimiters = DefaultClauseDelimiters());

}  // namespace corn::text

#endif  // CORN_TEXT_CLAUSES_H_
