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

#ifndef CORN_CURATION_POLARITY_H_
#define CORN_CURATION_POLARITY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corn/common/labels.h"
#include "corn/curation/annotated_corpus.h"
#include "corn/curation/lexicon.h"
#include "corn/text/clauses.h"
#include "corn/text/tokenizer.h"

namespace corn::curation {

struct PolarityOptions {
  // Flip a lexicon hit preceded within `negation_window` tokens of the
  // clause by "not", "no" or "never".
  bool negation = false;
  size_t negation_window = 3;
};

struct PolarityResult {
  Polarity polarity = Polarity::kNeu;
  std::optional<std::string> opinion_term;
};

// Lexicon polarity of `aspect` within `clause`. Tokens belonging to an
// occurrence of the aspect are skipped. When hits of only one polarity are
// found that polarity wins; when both are found the hit nearest to the first
// aspect occurrence wins, and an exact distance tie resolves to NEG. No hit
// means NEU with no opinion term.
//
// Throws Error(kAspectNotInClause) when the aspect does not occur.
PolarityResult AssignPolarity(const text::TokenizedSentence& sentence,
                              const text::Clause& clause,
                              std::string_view aspect,
                              const OpinionLexicon& lexicon,
                              const PolarityOptions& options = {});

struct SentimentClause {
  text::Clause clause;
  std::string aspect;  // normalized
  Polarity polarity = Polarity::kNeu;
  std::optional<std::string> opinion_term;
  std::string category;
};

// All (clause, aspect) pairs where an aspect from `aspects` occurs in a
// clause. A clause mentioning two aspects yields two entries.
std::vector<SentimentClause> ExtractSentimentClauses(
    std::span<const AnnotatedSentence> corpus, const TermSet& aspects,
    const OpinionLexicon& lexicon, const PolarityOptions& options = {},
    const text::DelimiterSet& delimiters = text::DefaultClauseDelimiters());

}  // namespace corn::curation

#endif  // CORN_CURATION_POLARITY_H_
