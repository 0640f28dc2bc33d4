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

#ifndef CORN_TEXT_SPANS_H_
#define CORN_TEXT_SPANS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "corn/text/clauses.h"
#include "corn/text/tokenizer.h"

namespace corn::text {

inline constexpr size_t kDefaultMaxSpanLength = 6;

struct SpanCandidate {
  size_t start = 0;
  size_t end = 0;
  std::string text;

  size_t length() const { return end - start; }
  bool Overlaps(const SpanCandidate& other) const {
    return start < other.end && other.start < end;
  }
};

// Every contiguous span of 1..min(max_len, n) tokens, ordered by
// (start, length). Throws Error(kInvalidArgument) when max_len == 0.
std::vector<SpanCandidate> EnumerateSpans(const TokenizedSentence& sentence,
                                          size_t max_len = kDefaultMaxSpanLength);

// Drops spans whose first or last token is punctuation or a delimiter word.
std::vector<SpanCandidate> DropDelimitedEdges(
    const TokenizedSentence& sentence, std::vector<SpanCandidate> spans,
    const DelimiterSet& delimiters = DefaultClauseDelimiters());

// Closed form of EnumerateSpans(...).size().
size_t SpanCount(size_t n_tokens, size_t max_len);

}  // namespace corn::text

#endif  // CORN_TEXT_SPANS_H_
