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

#include "corn/backend/rule_backend.h"

#include <algorithm>

#include "corn/casting/label_mapping.h"
#include "corn/common/error.h"
#include "corn/text/clauses.h"
#include "corn/text/match.h"
#include "corn/text/tokenizer.h"
#include "corn/text/utf8.h"

namespace corn::backend {
namespace {

constexpr size_t kOpinionWindow = 3;

NliDistribution Soft(NliLabel label) {
  NliDistribution d{0.1, 0.1, 0.1};
  switch (label) {
    case NliLabel::kEntailment: d.entailment = 0.8; break;
    case NliLabel::kNeutral: d.neutral = 0.8; break;
    case NliLabel::kContradiction: d.contradiction = 0.8; break;
  }
  return d;
}

}  // namespace

RuleBackend::RuleBackend(curation::OpinionLexicon lexicon, casting::PromptConfig prompts,
                         curation::TermSet known_aspects,
                         curation::PolarityOptions polarity)
    : lexicon_(std::move(lexicon)),
      prompts_(std::move(prompts)),
      polarity_(polarity) {
  for (const std::string& a : known_aspects) known_aspects_.insert(text::NormalizeTerm(a));
}

std::vector<NliDistribution> RuleBackend::ClassifyBatch(
    std::span<const NliQuery> queries) const {
  if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  std::vector<NliDistribution> out;
  out.reserve(queries.size());
  for (const NliQuery& q : queries) out.push_back(Soft(Decide(q)));
  return out;
}

NliLabel RuleBackend::Decide(const NliQuery& query) const {
  if (auto span = casting::MatchHypothesis(casting::HypothesisTask::kAe, prompts_,
                                           query.hypothesis)) {
    return DecideAspect(query.premise, *span);
  }
  if (auto aspect = casting::MatchHypothesis(casting::HypothesisTask::kAsc, prompts_,
                                             query.hypothesis)) {
    return DecidePolarity(query.premise, *aspect);
  }
  return NliLabel::kNeutral;
}

NliLabel RuleBackend::DecideAspect(const std::string& premise,
                                   const std::string& span) const {
  const text::TokenizedSentence sentence = text::Tokenize(premise);
  const auto occurrences = text::FindTermOccurrences(sentence, span);
  if (occurrences.empty()) return NliLabel::kNeutral;
  if (!known_aspects_.empty()) {
    return known_aspects_.count(text::NormalizeTerm(span)) > 0 ? NliLabel::kEntailment
                                                               : NliLabel::kNeutral;
  }
  for (const auto& [b, e] : occurrences) {
    bool opinion_inside = false;
    for (size_t i = b; i < e; ++i) {
      const std::string& t = sentence.tokens[i].text;
      if (lexicon_.Contains(text::AsciiLower(t)) || text::IsPunctuationToken(t)) {
        opinion_inside = true;
      }
    }
    if (opinion_inside) continue;
    const size_t lo = b >= kOpinionWindow ? b - kOpinionWindow : 0;
    const size_t hi = std::min(sentence.size(), e + kOpinionWindow);
    for (size_t i = lo; i < hi; ++i) {
      if (i >= b && i < e) continue;
      if (lexicon_.Contains(text::AsciiLower(sentence.tokens[i].text))) {
        return NliLabel::kEntailment;
      }
    }
  }
  return NliLabel::kNeutral;
}

NliLabel RuleBackend::DecidePolarity(const std::string& premise,
                                     const std::string& aspect) const {
  const text::TokenizedSentence sentence = text::Tokenize(premise);
  for (const text::Clause& clause : text::SegmentClauses(sentence)) {
    if (text::FindTermOccurrences(sentence, aspect, clause.start, clause.end).empty()) {
      continue;
    }
    const auto result = curation::AssignPolarity(sentence, clause, aspect, lexicon_, polarity_);
    return casting::PolarityToNli(result.polarity);
  }
  return NliLabel::kNeutral;
}

}  // namespace corn::backend
