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

#ifndef CORN_COMMON_LABELS_H_
#define CORN_COMMON_LABELS_H_

#include <array>
#include <string_view>

namespace corn {

enum class NliLabel { kEntailment, kNeutral, kContradiction };

// Sentiment polarity. Doubles as the ASC label space.
enum class Polarity { kPos, kNeu, kNeg };
using AscLabel = Polarity;

enum class BioLabel { kB, kI, kO };

// Span-level AE decision before BIO reconstruction.
enum class AeLabel { kAspect, kOutside };

enum class E2eLabel { kTPos, kTNeu, kTNeg, kO };

inline constexpr std::array<NliLabel, 3> kAllNliLabels = {
    NliLabel::kEntailment, NliLabel::kNeutral, NliLabel::kContradiction};
inline constexpr std::array<Polarity, 3> kAllPolarities = {
    Polarity::kPos, Polarity::kNeu, Polarity::kNeg};
inline constexpr std::array<BioLabel, 3> kAllBioLabels = {
    BioLabel::kB, BioLabel::kI, BioLabel::kO};
inline constexpr std::array<E2eLabel, 4> kAllE2eLabels = {
    E2eLabel::kTPos, E2eLabel::kTNeu, E2eLabel::kTNeg, E2eLabel::kO};

// Canonical spellings: "entailment", "POS", "B", "T", "T-POS", ...
std::string_view ToString(NliLabel label);
std::string_view ToString(Polarity polarity);
std::string_view ToString(BioLabel label);
std::string_view ToString(AeLabel label);
std::string_view ToString(E2eLabel label);

// Parsers accept the canonical spellings and throw Error(kMalformedInput)
// otherwise. ParsePolarity also accepts SemEval's lowercase words.
NliLabel ParseNliLabel(std::string_view text);
Polarity ParsePolarity(std::string_view text);
BioLabel ParseBioLabel(std::string_view text);
E2eLabel ParseE2eLabel(std::string_view text);

// POS <-> NEG, NEU unchanged.
Polarity Flip(Polarity polarity);

}  // namespace corn

#endif  // CORN_COMMON_LABELS_H_
