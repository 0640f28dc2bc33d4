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

#ifndef CORN_EVAL_SEMEVAL_H_
#define CORN_EVAL_SEMEVAL_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "corn/eval/gold.h"

namespace corn::eval {

struct ConversionReport {
  size_t sentences = 0;
  size_t aspects = 0;             // kept
  size_t positive = 0;
  size_t neutral = 0;
  size_t negative = 0;
  size_t conflict_dropped = 0;
  size_t null_targets = 0;        // Opinion target="NULL"
  size_t duplicates_dropped = 0;  // same span repeated
  size_t overlaps_dropped = 0;    // overlapping a kept span
  size_t snapped = 0;             // offsets moved to token boundaries
  size_t aspect_tokens = 0;       // tokens labeled B or I
  size_t outside_tokens = 0;
  std::vector<std::string> warnings;
};

struct SemEvalConversion {
  std::vector<GoldSentence> sentences;
  ConversionReport report;
};

// Reads SemEval ABSA XML: <sentence id><text> with either
// <aspectTerms><aspectTerm term polarity from to/> or
// <Opinions><Opinion target polarity from to/>. Sentences may sit at any
// depth. Character offsets are code points into <text>.
//
// Offsets are projected onto the tokenizer. A boundary that falls inside a
// token is widened to the whole token and counted as snapped. Conflict
// polarities and NULL targets are dropped. Repeated spans are kept once;
// a span overlapping an earlier kept one is dropped.
//
// Errors: kMalformedXml for unparsable input or a sentence without text or
// id, kOffsetOutOfRange for offsets outside the text or covering no token.
SemEvalConversion ConvertSemEval(std::string_view xml);
SemEvalConversion ConvertSemEvalFile(const std::filesystem::path& path);

std::string ConversionReportToJson(const ConversionReport& report);

}  // namespace corn::eval

#endif  // CORN_EVAL_SEMEVAL_H_
