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

#include "corn/casting/label_mapping.h"

namespace corn::casting {

AeLabel MapNliToAe(NliLabel label) {
  return label == NliLabel::kEntailment ? AeLabel::kAspect : AeLabel::kOutside;
}

Polarity MapNliToAsc(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment: return Polarity::kPos;
    case NliLabel::kNeutral: return Polarity::kNeu;
    case NliLabel::kContradiction: return Polarity::kNeg;
  }
  return Polarity::kNeu;
}

E2eLabel MapNliToE2e(NliLabel label) {
  return PolarityToE2e(MapNliToAsc(label));
}

std::string_view MapNli(CastTask task, NliLabel label) {
  switch (task) {
    case CastTask::kAe: return ToString(MapNliToAe(label));
    case CastTask::kAsc: return ToString(MapNliToAsc(label));
    case CastTask::kE2eStep2: return ToString(MapNliToE2e(label));
  }
  return "";
}

NliLabel PolarityToNli(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPos: return NliLabel::kEntailment;
    case Polarity::kNeu: return NliLabel::kNeutral;
    case Polarity::kNeg: return NliLabel::kContradiction;
  }
  return NliLabel::kNeutral;
}

E2eLabel PolarityToE2e(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPos: return E2eLabel::kTPos;
    case Polarity::kNeu: return E2eLabel::kTNeu;
    case Polarity::kNeg: return E2eLabel::kTNeg;
  }
  return E2eLabel::kO;
}

}  // namespace corn::casting
