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

#ifndef CORN_CASTING_PREDICTOR_H_
#define CORN_CASTING_PREDICTOR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corn/backend/backend.h"
#include "corn/casting/overlap.h"
#include "corn/casting/prompt.h"
#include "corn/common/labels.h"
#include "corn/text/clauses.h"
#include "corn/text/tokenizer.h"

namespace corn::casting {

struct AeOptions {
  size_t max_span_len = text::kDefaultMaxSpanLength;
  // Skip candidate spans that start or end on punctuation or a delimiter.
  bool drop_delimited_edges = true;
  // When set, a span is an aspect iff entailment >= threshold; otherwise the
  // argmax label decides.
  std::optional<double> entail_threshold;
  text::DelimiterSet delimiters = text::DefaultClauseDelimiters();
};

struct AscPrediction {
  Polarity label = Polarity::kNeu;
  backend::NliDistribution distribution;
  std::string hypothesis;
};

// Premise is the raw sentence, hypothesis the ASC prompt for `aspect`.
AscPrediction PredictAsc(const text::TokenizedSentence& sentence,
                         std::string_view aspect, const PromptConfig& prompts,
                         const backend::NliBackend& backend);

struct AePrediction {
  std::vector<BioLabel> labels;
  std::vector<ScoredSpan> kept;     // after overlap resolution, by start
  size_t candidates = 0;            // spans sent to the backend
};

// Candidate spans -> AE hypotheses -> one backend batch -> spans mapped to T
// -> overlap resolution -> BIO.
AePrediction PredictAe(const text::TokenizedSentence& sentence,
                       const PromptConfig& prompts,
                       const backend::NliBackend& backend,
                       const AeOptions& options = {});

struct E2eSpan {
  ScoredSpan span;  // step-1 evidence
  E2eLabel label = E2eLabel::kO;
  backend::NliDistribution polarity_distribution;
  std::string hypothesis;
};

struct E2ePrediction {
  std::vector<E2eLabel> labels;
  AePrediction ae;
  std::vector<E2eSpan> spans;
};

// Step 1 is PredictAe. Step 2 asks the ASC prompt for every kept span and
// labels all of its tokens with the mapped T-* label. Tokens outside kept
// spans are O, so O positions always equal the step-1 O positions.
E2ePrediction PredictE2e(const text::TokenizedSentence& sentence,
                         const PromptConfig& prompts,
                         const backend::NliBackend& backend,
                         const AeOptions& options = {});

}  // namespace corn::casting

#endif  // CORN_CASTING_PREDICTOR_H_
