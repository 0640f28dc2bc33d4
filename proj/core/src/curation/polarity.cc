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

#include "corn/curation/polarity.h"

#include <algorithm>

#include "corn/common/error.h"
#include "corn/text/match.h"
#include "corn/text/utf8.h"

namespace corn::curation {
namespace {

bool IsNegator(const std::string& lower) {
  return lower == "not" || lower == "no" || lower == "never";
}

struct Hit {
  size_t distance;
  size_t index;
  std::string term;
};

}  // namespace

PolarityResult AssignPolarity(const text::TokenizedSentence& sentence,
                              const text::Clause& clause,
                              std::string_view aspect,
                              const OpinionLexicon& lexicon,
                              const PolarityOptions& options) {
  const auto occurrences =
      text::FindTermOccurrences(sentence, aspect, clause.start, clause.end);
  if (occurrences.empty()) {
    throw Error(ErrorCode::kAspectNotInClause,
                "'" + std::string(aspect) + "' not in clause '" + clause.text + "'");
  }
  std::vector<bool> inside(sentence.size(), false);
  for (const auto& [b, e] : occurrences) {
    for (size_t i = b; i < e; ++i) inside[i] = true;
  }
  const size_t a_begin = occurrences.front().first;
  const size_t a_last = occurrences.front().second - 1;

  std::optional<Hit> best_pos;
  std::optional<Hit> best_neg;
  for (size_t i = clause.start; i < clause.end; ++i) {
    if (inside[i]) continue;
    const std::string word = text::AsciiLower(sentence.tokens[i].text);
    std::optional<Polarity> hit = lexicon.Lookup(word);
    if (!hit) continue;
    if (options.negation) {
      const size_t from = i >= clause.start + options.negation_window
                              ? i - options.negation_window
                              : clause.start;
      for (size_t k = from; k < i; ++k) {
        if (IsNegator(text::AsciiLower(sentence.tokens[k].text))) {
          hit = Flip(*hit);
          break;
        }
      }
    }
    const size_t distance = i < a_begin ? a_begin - i : i - a_last;
    std::optional<Hit>& slot = *hit == Polarity::kPos ? best_pos : best_neg;
    if (!slot || distance < slot->distance) slot = Hit{distance, i, word};
  }

  PolarityResult result;
  if (best_pos && (!best_neg || best_pos->distance < best_neg->distance)) {
    result.polarity = Polarity::kPos;
    result.opinion_term = best_pos->term;
  } else if (best_neg) {
    result.polarity = Polarity::kNeg;
    result.opinion_term = best_neg->term;
  }
  return result;
}

std::vector<SentimentClause> ExtractSentimentClauses(
    std::span<const AnnotatedSentence> corpus, const TermSet& aspects,
    const OpinionLexicon& lexicon, const PolarityOptions& options,
    const text::DelimiterSet& delimiters) {
  std::vector<SentimentClause> out;
  for (const AnnotatedSentence& s : corpus) {
    for (const text::Clause& clause : text::SegmentClauses(s.sentence, delimiters)) {
      for (const std::string& aspect : aspects) {
        if (text::FindTermOccurrences(s.sentence, aspect, clause.start, clause.end)
                .empty()) {
          continue;
        }
        PolarityResult polarity =
            AssignPolarity(s.sentence, clause, aspect, lexicon, options);
        out.push_back({clause, aspect, polarity.polarity,
                       std::move(polarity.opinion_term), s.category});
      }
    }
  }
  return out;
}

}  // namespace corn::curation
