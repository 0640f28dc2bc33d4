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

#include "corn/text/match.h"

#include <algorithm>

#include "corn/text/utf8.h"

namespace corn::text {

std::string NormalizeTerm(std::string_view term) {
  return CollapseSpaces(AsciiLower(term));
}

std::vector<std::pair<size_t, size_t>> FindTermOccurrences(
    const TokenizedSentence& sentence, std::string_view term, size_t begin,
    size_t end) {
  std::vector<std::pair<size_t, size_t>> found;
  const std::string needle = NormalizeTerm(term);
  if (needle.empty()) return found;
  end = std::min(end, sentence.size());
  for (size_t s = begin; s < end; ++s) {
    for (size_t e = s + 1; e <= end; ++e) {
      const std::string slice = NormalizeTerm(sentence.Slice(s, e));
      if (slice.size() > needle.size()) break;
      if (slice == needle) {
        found.emplace_back(s, e);
        break;
      }
    }
  }
  return found;
}

}  // namespace corn::text
