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

#ifndef CORN_CURATION_DOUBLE_PROPAGATION_H_
#define CORN_CURATION_DOUBLE_PROPAGATION_H_

#include <cstddef>
#include <span>

#include "corn/curation/annotated_corpus.h"
#include "corn/curation/lexicon.h"

namespace corn::curation {

struct PropagationResult {
  TermSet aspects;   // seeds plus everything extracted
  TermSet opinions;  // lexicon plus learned opinion words
  size_t iterations = 0;
  bool converged = false;
};

// Double propagation over dependency-annotated sentences. Starting from the
// seed aspects and the lexicon's opinion words, each pass applies
//
//   R-OA  opinion word --amod/nsubj-- NOUN        => NOUN is an aspect
//   R-AO  ADJ --amod/nsubj-- known aspect         => ADJ is an opinion
//   R-AA  NOUN --conj-- known aspect              => NOUN is an aspect
//   R-OO  ADJ --conj-- known opinion              => ADJ is an opinion
//
// where "--rel--" holds in either head direction. New aspects absorb their
// left compound modifiers ("battery life"). Every pass reads the sets as they
// stood at its start, so the result does not depend on sentence order. Stops
// at a fixed point or after max_iters passes.
//
// Throws Error(kEmptyCorpus) for an empty corpus and
// Error(kMissingAnnotations) if any token lacks a POS tag or head.
PropagationResult ExtractAspects(std::span<const AnnotatedSentence> corpus,
                                 const SeedAspectSet& seeds,
                                 const OpinionLexicon& lexicon,
                                 size_t max_iters = 10);

}  // namespace corn::curation

#endif  // CORN_CURATION_DOUBLE_PROPAGATION_H_
