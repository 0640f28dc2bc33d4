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

#ifndef CORN_CURATION_ANNOTATED_CORPUS_H_
#define CORN_CURATION_ANNOTATED_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corn/text/tokenizer.h"

namespace corn::curation {

enum class PosTag { kNoun, kAdj, kVerb, kOther };

// Maps UD (NOUN, PROPN, ADJ, VERB, ...) and Penn (NN*, JJ*, VB*) tags onto
// the coarse set. Anything else is kOther.
PosTag ParsePosTag(std::string_view tag);

// Syntactic annotation for the token at the same index of the sentence.
// pos/head are optional so that incomplete input can be reported rather
// than silently defaulted.
struct AnnotatedToken {
  std::optional<PosTag> pos;
  std::optional<int> head;  // parent token index, -1 for the root
  std::string dep_rel;      // lowercase
};

struct AnnotatedSentence {
  std::string category;
  text::TokenizedSentence sentence;
  std::vector<AnnotatedToken> annotations;
};

// One corpus line:
//   {"sentence_id": ..., "category": ..., "raw": ...,
//    "tokens": [{"text": ..., "pos": ..., "head": ..., "dep": ...}, ...]}
// Missing pos/head are kept as nullopt; a head outside [-1, n) or pointing
// at the token itself is Error(kMalformedInput).
AnnotatedSentence ParseAnnotatedSentence(std::string_view json_line);

std::vector<AnnotatedSentence> LoadAnnotatedCorpus(
    const std::filesystem::path& path);

}  // namespace corn::curation

#endif  // CORN_CURATION_ANNOTATED_CORPUS_H_
