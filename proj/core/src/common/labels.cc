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

#include "corn/common/labels.h"

#include <string>

#include "corn/common/error.h"

namespace corn {

std::string_view ToString(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment: return "entailment";
    case NliLabel::kNeutral: return "neutral";
    case NliLabel::kContradiction: return "contradiction";
  }
  return "";
}

std::string_view ToString(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPos: return "POS";
    case Polarity::kNeu: return "NEU";
    case Polarity::kNeg: return "NEG";
  }
  return "";
}

std::string_view ToString(BioLabel label) {
  switch (label) {
    case BioLabel::kB: return "B";
    case BioLabel::kI: return "I";
    case BioLabel::kO: return "O";
  }
  return "";
}

std::string_view ToString(AeLabel label) {
  return label == AeLabel::kAspect ? "T" : "O";
}

std::string_view ToString(E2eLabel label) {
  switch (label) {
    case E2eLabel::kTPos: return "T-POS";
    case E2eLabel::kTNeu: return "T-NEU";
    case E2eLabel::kTNeg: return "T-NEG";
    case E2eLabel::kO: return "O";
  }
  return "";
}

namespace {

[[noreturn]] void BadLabel(std::string_view kind, std::string_view text) {
  throw Error(ErrorCode::kMalformedInput,
              "unknown " + std::string(kind) + " label '" + std::string(text) +
                  "'");
}

}  // namespace

NliLabel ParseNliLabel(std::string_view text) {
  for (NliLabel label : kAllNliLabels) {
    if (ToString(label) == text) return label;
  }
  BadLabel("NLI", text);
}

Polarity ParsePolarity(std::string_view text) {
  if (text == "POS" || text == "positive") return Polarity::kPos;
  if (text == "NEU" || text == "neutral") return Polarity::kNeu;
  if (text == "NEG" || text == "negative") return Polarity::kNeg;
  BadLabel("polarity", text);
}

BioLabel ParseBioLabel(std::string_view text) {
  for (BioLabel label : kAllBioLabels) {
    if (ToString(label) == text) return label;
  }
  BadLabel("BIO", text);
}

E2eLabel ParseE2eLabel(std::string_view text) {
  for (E2eLabel label : kAllE2eLabels) {
    if (ToString(label) == text) return label;
  }
  BadLabel("E2E", text);
}

Polarity Flip(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPos: return Polarity::kNeg;
    case Polarity::kNeg: return Polarity::kPos;
    case Polarity::kNeu: return Polarity::kNeu;
  }
  return polarity;
}

}  // namespace corn
