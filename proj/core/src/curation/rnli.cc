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

#include "corn/curation/rnli.h"

#include "corn/common/error.h"
#include "json.hpp"

namespace corn::curation {

NliLabel LabelFromPolarities(std::optional<Polarity> premise, Polarity hypothesis) {
  if (!premise) return NliLabel::kNeutral;
  if (hypothesis == Polarity::kNeu) return NliLabel::kEntailment;
  if (*premise == hypothesis) return NliLabel::kEntailment;
  if (*premise == Polarity::kNeu) return NliLabel::kNeutral;
  return NliLabel::kContradiction;
}

NliLabel LabelPair(const PremiseMap& premise_map, std::string_view aspect,
                   Polarity hypothesis) {
  const auto it = premise_map.find(aspect);
  return LabelFromPolarities(
      it == premise_map.end() ? std::nullopt : std::optional(it->second),
      hypothesis);
}

bool IsLabelConsistent(const RnliExample& example) {
  return LabelFromPolarities(example.meta.premise_polarity,
                             example.meta.hypothesis_polarity) == example.label;
}

std::string SerializeExample(const RnliExample& example) {
  using nlohmann::ordered_json;
  ordered_json clauses = ordered_json::array();
  for (const PremiseClauseMeta& c : example.meta.premise_clauses) {
    clauses.push_back(ordered_json{{"text", c.text},
                                   {"aspect", c.aspect},
                                   {"polarity", ToString(c.polarity)}});
  }
  ordered_json meta;
  meta["category"] = example.meta.category;
  meta["hypothesis_aspect"] = example.meta.hypothesis_aspect;
  meta["premise_polarity"] =
      example.meta.premise_polarity
          ? ordered_json(ToString(*example.meta.premise_polarity))
          : ordered_json(nullptr);
  meta["hypothesis_polarity"] = ToString(example.meta.hypothesis_polarity);
  meta["premise_clauses"] = std::move(clauses);

  ordered_json doc;
  doc["premise"] = example.premise;
  doc["hypothesis"] = example.hypothesis;
  doc["label"] = ToString(example.label);
  doc["meta"] = std::move(meta);
  return doc.dump();
}

RnliExample ParseExample(std::string_view json_line) {
  using nlohmann::json;
  RnliExample ex;
  try {
    const json doc = json::parse(json_line);
    ex.premise = doc.at("premise").get<std::string>();
    ex.hypothesis = doc.at("hypothesis").get<std::string>();
    ex.label = ParseNliLabel(doc.at("label").get<std::string>());
    const json& meta = doc.at("meta");
    ex.meta.category = meta.at("category").get<std::string>();
    ex.meta.hypothesis_aspect = meta.at("hypothesis_aspect").get<std::string>();
    if (!meta.at("premise_polarity").is_null()) {
      ex.meta.premise_polarity =
          ParsePolarity(meta["premise_polarity"].get<std::string>());
    }
    ex.meta.hypothesis_polarity =
        ParsePolarity(meta.at("hypothesis_polarity").get<std::string>());
    if (meta.contains("premise_clauses")) {
      for (const json& c : meta["premise_clauses"]) {
        ex.meta.premise_clauses.push_back(
            {c.at("text").get<std::string>(), c.at("aspect").get<std::string>(),
             ParsePolarity(c.at("polarity").get<std::string>())});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("RNLI example: ") + e.what());
  }
  return ex;
}

}  // namespace corn::curation
