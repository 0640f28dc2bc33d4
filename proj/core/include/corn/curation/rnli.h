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

#ifndef CORN_CURATION_RNLI_H_
#define CORN_CURATION_RNLI_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corn/common/labels.h"
#include "corn/curation/premise.h"

namespace corn::curation {

// The pseudo-label matrix. With p the premise polarity of the hypothesis
// aspect (nullopt when the premise does not mention it) and h the
// hypothesis polarity:
//
//   p absent           -> neutral
//   h = NEU            -> entailment
//   p = h              -> entailment
//   p = NEU, h != NEU  -> neutral
//   {p, h} = {POS,NEG} -> contradiction
NliLabel LabelFromPolarities(std::optional<Polarity> premise, Polarity hypothesis);

NliLabel LabelPair(const PremiseMap& premise_map, std::string_view aspect,
                   Polarity hypothesis);

inline NliLabel LabelPair(const PremiseMap& premise_map,
                          const SentimentClause& hypothesis) {
  return LabelPair(premise_map, hypothesis.aspect, hypothesis.polarity);
}

struct PremiseClauseMeta {
  std::string text;
  std::string aspect;
  Polarity polarity = Polarity::kNeu;
};

struct RnliMeta {
  std::string category;
  std::string hypothesis_aspect;
  std::optional<Polarity> premise_polarity;
  Polarity hypothesis_polarity = Polarity::kNeu;
  std::vector<PremiseClauseMeta> premise_clauses;
};

struct RnliExample {
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kNeutral;
  RnliMeta meta;
};

// The stored label agrees with the matrix applied to meta.
bool IsLabelConsistent(const RnliExample& example);

// One JSON object, no trailing newline. Field order is fixed so output is
// byte-stable.
std::string SerializeExample(const RnliExample& example);
RnliExample ParseExample(std::string_view json_line);

}  // namespace corn::curation

#endif  // CORN_CURATION_RNLI_H_
