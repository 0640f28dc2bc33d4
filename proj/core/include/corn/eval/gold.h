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

#ifndef CORN_EVAL_GOLD_H_
#define CORN_EVAL_GOLD_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corn/common/labels.h"
#include "corn/text/tokenizer.h"

namespace corn::eval {

struct GoldAspect {
  size_t start = 0;  // token range [start, end)
  size_t end = 0;
  Polarity polarity = Polarity::kNeu;
  std::string term;

  bool operator==(const GoldAspect&) const = default;
};

struct GoldSentence {
  std::string sentence_id;
  std::string raw;
  std::vector<std::string> tokens;
  std::vector<BioLabel> ae_labels;
  std::vector<GoldAspect> aspects;  // sorted by start, disjoint
  std::vector<E2eLabel> e2e_labels;

  text::TokenizedSentence ToTokenized() const;
};

// BIO and E2E sequences implied by a set of aspects.
std::vector<BioLabel> AspectsToBio(size_t n_tokens, std::span<const GoldAspect> aspects);
std::vector<E2eLabel> AspectsToE2e(size_t n_tokens, std::span<const GoldAspect> aspects);

// Fills ae_labels and e2e_labels from tokens and aspects.
GoldSentence MakeGoldSentence(std::string sentence_id, std::string raw,
                              std::vector<std::string> tokens,
                              std::vector<GoldAspect> aspects);

// Sequence lengths match the token count, aspect ranges are in bounds and
// disjoint, tokens align with raw, and both label sequences equal the ones
// derived from the aspects. Throws Error(kMalformedGold).
void ValidateGold(const GoldSentence& gold);

// JSONL schema:
//   {"sentence_id", "raw", "tokens": [...], "ae_labels": ["O","B",...],
//    "aspects": [{"start","end","polarity","term"}], "e2e_labels": [...]}
std::string SerializeGold(const GoldSentence& gold);
GoldSentence ParseGold(std::string_view json_line);  // validates

std::vector<GoldSentence> LoadGold(const std::filesystem::path& path);
void WriteGold(const std::filesystem::path& path, std::span<const GoldSentence> gold);

}  // namespace corn::eval

#endif  // CORN_EVAL_GOLD_H_
