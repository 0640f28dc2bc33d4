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

#ifndef CORN_TEXT_MATCH_H_
#define CORN_TEXT_MATCH_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corn/text/tokenizer.h"

namespace corn::text {

// Lowercased, whitespace-collapsed form used as the identity of a term.
std::string NormalizeTerm(std::string_view term);

// Token ranges [start, end) inside [begin, end) whose raw text equals `term`
// case-insensitively (whitespace runs compared as one space). Matches
// always start and end on token boundaries.
std::vector<std::pair<size_t, size_t>> FindTermOccurrences(
    const TokenizedSentence& sentence, std::string_view term, size_t begin,
    size_t end);

inline std::vector<std::pair<size_t, size_t>> FindTermOccurrences(
    const TokenizedSentence& sentence, std::string_view term) {
  return FindTermOccurrences(sentence, term, 0, sentence.size());
}

}  // namespace corn::text

#endif  // CORN_TEXT_MATCH_H_
