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

#ifndef CORN_CASTING_LABEL_MAPPING_H_
#define CORN_CASTING_LABEL_MAPPING_H_

#include <string_view>

#include "corn/common/labels.h"

namespace corn::casting {

enum class CastTask { kAe, kAsc, kE2eStep2 };

// NLI prediction -> ABSA label:
//   AE:        entailment -> T, neutral/contradiction -> Outside
//   ASC:       entailment -> POS, neutral -> NEU, contradiction -> NEG
//   E2E step2: entailment -> T-POS, neutral -> T-NEU, contradiction -> T-NEG
AeLabel MapNliToAe(NliLabel label);
Polarity MapNliToAsc(NliLabel label);
E2eLabel MapNliToE2e(NliLabel label);

// Same mapping, returning the label's canonical name for any task.
std::string_view MapNli(CastTask task, NliLabel label);

// Inverse of MapNliToAsc.
NliLabel PolarityToNli(Polarity polarity);

// POS -> T-POS, NEU -> T-NEU, NEG -> T-NEG.
E2eLabel PolarityToE2e(Polarity polarity);

}  // namespace corn::casting

#endif  // CORN_CASTING_LABEL_MAPPING_H_
