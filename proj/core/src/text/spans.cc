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

#include "corn/text/spans.h"

#include <algorithm>

#include "corn/common/error.h"

namespace corn::text {

std::vector<SpanCandidate> EnumerateSpans(const TokenizedSentence& sentence,
                                          size_t max_len) {
  if (max_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max span length must be >= 1");
  }
  const size_t n = sentence.size();
  std::vector<SpanCandidate> spans;
  spans.reserve(SpanCount(n, max_len));
  for (size_t start = 0; start < n; ++start) {
    const size_t longest = std::min(max_len, n - start);
    for (size_t len = 1; len <= longest; ++len) {
      spans.push_back({start, start + len,
                       std::string(sentence.Slice(start, start + len))});
    }
  }
  return spans;
}

std::vector<SpanCandidate> DropDelimitedEdges(const TokenizedSentence& sentence,
                                              std::vector<SpanCandidate> spans,
                                              const DelimiterSet& delimiters) {
  auto is_edge = [&](size_t i) {
    const std::string& t = sentence.tokens[i].text;
    return IsPunctuationToken(t) || IsDelimiter(t, delimiters);
  };
  std::erase_if(spans, [&](const SpanCandidate& span) {
    return is_edge(span.start) || is_edge(span.end - 1);
  });
  return spans;
}

size_t SpanCount(size_t n_tokens, size_t max_len) {
  size_t count = 0;
  for (size_t len = 1; len <= std::min(max_len, n_tokens); ++len) {
    count += n_tokens - len + 1;
  }
  return count;
}

}  // namespace corn::text
