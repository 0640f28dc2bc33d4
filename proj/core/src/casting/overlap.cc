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

#include "corn/casting/overlap.h"

#include <algorithm>

#include "corn/common/error.h"

namespace corn::casting {

std::vector<ScoredSpan> ResolveOverlaps(std::vector<ScoredSpan> spans) {
  std::sort(spans.begin(), spans.end(), [](const ScoredSpan& a, const ScoredSpan& b) {
    if (a.entail_score != b.entail_score) return a.entail_score > b.entail_score;
    if (a.span.length() != b.span.length()) return a.span.length() > b.span.length();
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    return a.span.end < b.span.end;
  });
  std::vector<ScoredSpan> kept;
  for (ScoredSpan& candidate : spans) {
    const bool clashes = std::any_of(kept.begin(), kept.end(), [&](const ScoredSpan& k) {
      return k.span.Overlaps(candidate.span);
    });
    if (!clashes) kept.push_back(std::move(candidate));
  }
  std::sort(kept.begin(), kept.end(), [](const ScoredSpan& a, const ScoredSpan& b) {
    return a.span.start < b.span.start;
  });
  return kept;
}

std::vector<BioLabel> RangesToBio(size_t n_tokens,
                                  std::span<const std::pair<size_t, size_t>> ranges) {
  std::vector<BioLabel> labels(n_tokens, BioLabel::kO);
  std::vector<bool> taken(n_tokens, false);
  for (const auto& [start, end] : ranges) {
    if (start >= end || end > n_tokens) {
      throw Error(ErrorCode::kInvalidArgument,
                  "span [" + std::to_string(start) + ", " + std::to_string(end) +
                      ") out of range for " + std::to_string(n_tokens) + " tokens");
    }
    for (size_t i = start; i < end; ++i) {
      if (taken[i]) {
        throw Error(ErrorCode::kOverlappingSpans,
                    "token " + std::to_string(i) + " covered by two spans");
      }
      taken[i] = true;
      labels[i] = i == start ? BioLabel::kB : BioLabel::kI;
    }
  }
  return labels;
}

std::vector<BioLabel> SpansToBio(size_t n_tokens, std::span<const ScoredSpan> spans) {
  std::vector<std::pair<size_t, size_t>> ranges;
  ranges.reserve(spans.size());
  for (const ScoredSpan& s : spans) ranges.emplace_back(s.span.start, s.span.end);
  return RangesToBio(n_tokens, ranges);
}

}  // namespace corn::casting
