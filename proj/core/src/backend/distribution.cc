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

#include <cmath>
#include <sstream>

#include "corn/backend/backend.h"
#include "corn/common/error.h"

namespace corn::backend {

NliDistribution NliDistribution::OneHot(NliLabel label) {
  NliDistribution d;
  switch (label) {
    case NliLabel::kEntailment: d.entailment = 1.0; break;
    case NliLabel::kNeutral: d.neutral = 1.0; break;
    case NliLabel::kContradiction: d.contradiction = 1.0; break;
  }
  return d;
}

double NliDistribution::operator[](NliLabel label) const {
  switch (label) {
    case NliLabel::kEntailment: return entailment;
    case NliLabel::kNeutral: return neutral;
    case NliLabel::kContradiction: return contradiction;
  }
  return 0.0;
}

bool NliDistribution::IsValid(double tolerance) const {
  for (double p : {entailment, neutral, contradiction}) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) return false;
  }
  return std::abs(entailment + neutral + contradiction - 1.0) <= tolerance;
}

NliLabel NliDistribution::Argmax() const {
  NliLabel best = NliLabel::kEntailment;
  for (NliLabel label : kAllNliLabels) {
    if ((*this)[label] > (*this)[best]) best = label;
  }
  return best;
}

void ValidateDistribution(const NliDistribution& d) {
  if (d.IsValid()) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "invalid NLI distribution (" << d.entailment << ", " << d.neutral
      << ", " << d.contradiction << ")";
  throw Error(ErrorCode::kMalformedResponse, msg.str());
}

ModelInput FormatModelInput(const NliQuery& query) {
  if (query.premise.empty() || query.hypothesis.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "premise and hypothesis must be non-empty");
  }
  return {"[CLS] " + query.premise + " [SEP] " + query.hypothesis + " [SEP]"};
}

}  // namespace corn::backend
