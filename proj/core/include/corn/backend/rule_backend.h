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

#ifndef CORN_BACKEND_RULE_BACKEND_H_
#define CORN_BACKEND_RULE_BACKEND_H_

#include <string>

#include "corn/backend/backend.h"
#include "corn/casting/prompt.h"
#include "corn/curation/lexicon.h"
#include "corn/curation/polarity.h"

namespace corn::backend {

// Offline heuristic for smoke tests. It is not a stand-in for a trained
// model.
//
//  - ASC prompts: lexicon polarity of the aspect within its clause of the
//    premise (POS -> entailment, NEG -> contradiction, NEU or not found ->
//    neutral).
//  - AE prompts: entailment when the span is a known aspect, or, with no
//    known aspects configured, when an opinion word sits within three
//    tokens of the span and the span itself holds none.
//  - Anything else: neutral.
//
// The chosen label gets probability 0.8, the others 0.1 each.
class RuleBackend : public NliBackend {
 public:
  RuleBackend(curation::OpinionLexicon lexicon, casting::PromptConfig prompts,
              curation::TermSet known_aspects = {},
              curation::PolarityOptions polarity = {});

  std::vector<NliDistribution> ClassifyBatch(
      std::span<const NliQuery> queries) const override;
  std::string Name() const override { return "rule"; }

  NliLabel Decide(const NliQuery& query) const;

 private:
  NliLabel DecideAspect(const std::string& premise, const std::string& span) const;
  NliLabel DecidePolarity(const std::string& premise, const std::string& aspect) const;

  curation::OpinionLexicon lexicon_;
  casting::PromptConfig prompts_;
  curation::TermSet known_aspects_;
  curation::PolarityOptions polarity_;
};

}  // namespace corn::backend

#endif  // CORN_BACKEND_RULE_BACKEND_H_
