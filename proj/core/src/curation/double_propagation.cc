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

#include "corn/curation/double_propagation.h"

#include <string>
#include <vector>

#include "corn/common/error.h"
#include "corn/text/match.h"
#include "corn/text/utf8.h"

namespace corn::curation {
namespace {

bool IsModifierRel(const std::string& rel) {
  return rel == "amod" || rel == "nsubj" || rel == "nsubj:pass" ||
         rel == "nsubjpass";
}

bool IsConjRel(const std::string& rel) { return rel == "conj"; }

bool IsCompoundRel(const std::string& rel) {
  return rel == "compound" || rel == "compound:nn" || rel == "nn";
}

// a and b are linked by a relation accepted by `pred`, in either direction.
template <typename Pred>
bool Linked(const AnnotatedSentence& s, size_t a, size_t b, Pred pred) {
  const AnnotatedToken& ta = s.annotations[a];
  const AnnotatedToken& tb = s.annotations[b];
  return (*ta.head == static_cast<int>(b) && pred(ta.dep_rel)) ||
         (*tb.head == static_cast<int>(a) && pred(tb.dep_rel));
}

// Noun plus its contiguous compound modifiers to the left.
std::string AspectPhrase(const AnnotatedSentence& s, size_t noun) {
  size_t start = noun;
  while (start > 0) {
    const AnnotatedToken& prev = s.annotations[start - 1];
    const int head = *prev.head;
    if (!IsCompoundRel(prev.dep_rel) || head < static_cast<int>(start) ||
        head > static_cast<int>(noun)) {
      break;
    }
    --start;
  }
  return text::NormalizeTerm(s.sentence.Slice(start, noun + 1));
}

void Validate(std::span<const AnnotatedSentence> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no sentences");
  for (const AnnotatedSentence& s : corpus) {
    if (s.annotations.size() != s.sentence.size()) {
      throw Error(ErrorCode::kMissingAnnotations,
                  "sentence '" + s.sentence.sentence_id +
                      "' has a token/annotation count mismatch");
    }
    for (size_t i = 0; i < s.annotations.size(); ++i) {
      if (!s.annotations[i].pos || !s.annotations[i].head) {
        throw Error(ErrorCode::kMissingAnnotations,
                    "sentence '" + s.sentence.sentence_id + "' token " +
                        std::to_string(i) + " lacks pos or head");
      }
    }
  }
}

void PropagateSentence(const AnnotatedSentence& s, const TermSet& aspects,
                       const TermSet& opinions, TermSet& new_aspects,
                       TermSet& new_opinions) {
  const size_t n = s.sentence.size();
  std::vector<bool> in_aspect(n, false);
  for (const std::string& aspect : aspects) {
    for (const auto& [b, e] : text::FindTermOccurrences(s.sentence, aspect)) {
      for (size_t i = b; i < e; ++i) in_aspect[i] = true;
    }
  }
  std::vector<bool> is_opinion(n, false);
  for (size_t i = 0; i < n; ++i) {
    is_opinion[i] = opinions.count(text::AsciiLower(s.sentence.tokens[i].text)) > 0;
  }

  for (size_t t = 0; t < n; ++t) {
    const PosTag pos = *s.annotations[t].pos;
    for (size_t o = 0; o < n; ++o) {
      if (o == t) continue;
      if (pos == PosTag::kNoun && !in_aspect[t]) {
        if (is_opinion[o] && Linked(s, t, o, IsModifierRel)) {
          new_aspects.insert(AspectPhrase(s, t));  // R-OA
        }
        if (in_aspect[o] && Linked(s, t, o, IsConjRel)) {
          new_aspects.insert(AspectPhrase(s, t));  // R-AA
        }
      }
      if (pos == PosTag::kAdj && !is_opinion[t]) {
        const std::string word = text::AsciiLower(s.sentence.tokens[t].text);
        if (in_aspect[o] && Linked(s, t, o, IsModifierRel)) {
          new_opinions.insert(word);  // R-AO
        }
        if (is_opinion[o] && Linked(s, t, o, IsConjRel)) {
          new_opinions.insert(word);  // R-OO
        }
      }
    }
  }
}

}  // namespace

PropagationResult ExtractAspects(std::span<const AnnotatedSentence> corpus,
                                 const SeedAspectSet& seeds,
                                 const OpinionLexicon& lexicon,
                                 size_t max_iters) {
  Validate(corpus);
  PropagationResult result;
  result.aspects = seeds.aspects;
  result.opinions.insert(lexicon.positive.begin(), lexicon.positive.end());
  result.opinions.insert(lexicon.negative.begin(), lexicon.negative.end());
  if (result.aspects.empty() && result.opinions.empty()) {
    result.converged = true;
    return result;
  }

  while (result.iterations < max_iters) {
    TermSet new_aspects;
    TermSet new_opinions;
    for (const AnnotatedSentence& s : corpus) {
      PropagateSentence(s, result.aspects, result.opinions, new_aspects,
                        new_opinions);
    }
    ++result.iterations;
    const size_t before = result.aspects.size() + result.opinions.size();
    result.aspects.insert(new_aspects.begin(), new_aspects.end());
    result.opinions.insert(new_opinions.begin(), new_opinions.end());
    if (result.aspects.size() + result.opinions.size() == before) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace corn::curation
