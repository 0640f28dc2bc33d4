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

#ifndef CORN_CASTING_OVERLAP_H_
#define CORN_CASTING_OVERLAP_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corn/backend/backend.h"
#include "corn/common/labels.h"
#include "corn/text/spans.h"

namespace corn::casting {

struct ScoredSpan {
  text::SpanCandidate span;
  double entail_score = 0.0;  // == distribution.entailment
  backend::NliDistribution distribution;
  std::string hypothesis;
};

// Greedy selection of non-overlapping spans: highest entail_score first,
// ties going to the longer span and then the smaller start. The result is
// sorted by start and does not depend on input order.
std::vector<ScoredSpan> ResolveOverlaps(std::vector<ScoredSpan> spans);

// B on the first token of each range, I on the rest, O elsewhere.
// Overlapping ranges are Error(kOverlappingSpans); a range past n_tokens is
// Error(kInvalidArgument).
std::vector<BioLabel> RangesToBio(size_t n_tokens,
                                  std::span<const std::pair<size_t, size_t>> ranges);

std::vector<BioLabel> SpansToBio(size_t n_tokens, std::span<const ScoredSpan> spans);

}  // namespace corn::casting

#endif  // CORN_CASTING_OVERLAP_H_
