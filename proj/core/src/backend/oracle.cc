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

#include "corn/backend/oracle.h"

#include <set>

#include "corn/casting/label_mapping.h"
#include "corn/common/error.h"

namespace corn::backend {

bool OracleBackend::Add(const std::string& premise, const std::string& hypothesis,
                        NliLabel label) {
  const auto [it, inserted] = table_.emplace(std::pair(premise, hypothesis), label);
  if (!inserted && it->second != label) {
    ++conflicts_;
    return false;
  }
  return true;
}

void OracleBackend::Set(const std::string& premise, const std::string& hypothesis,
                        NliLabel label) {
  table_[{premise, hypothesis}] = label;
}

std::optional<NliLabel> OracleBackend::Find(const std::string& premise,
                                            const std::string& hypothesis) const {
  const auto it = table_.find({premise, hypothesis});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<NliDistribution> OracleBackend::ClassifyBatch(
    std::span<const NliQuery> queries) const {
  if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  std::vector<NliDistribution> out;
  out.reserve(queries.size());
  for (const NliQuery& q : queries) {
    const std::optional<NliLabel> label = Find(q.premise, q.hypothesis);
    if (!label && mode_ == Mode::kStrict) {
      throw Error(ErrorCode::kUnknownPair,
                  "no oracle entry for ('" + q.premise + "', '" + q.hypothesis + "')");
    }
    out.push_back(NliDistribution::OneHot(label.value_or(NliLabel::kNeutral)));
  }
  return out;
}

OracleBackend OracleFromGold(std::span<const eval::GoldSentence> gold,
                             const casting::PromptConfig& prompts,
                             size_t max_span_len, OracleBackend::Mode mode) {
  using casting::BuildHypothesis;
  using casting::HypothesisTask;
  OracleBackend oracle(mode);
  for (const eval::GoldSentence& g : gold) {
    eval::ValidateGold(g);
    const text::TokenizedSentence sentence = g.ToTokenized();

    std::set<std::string> aspect_prompts;
    for (const eval::GoldAspect& a : g.aspects) {
      const std::string span_text(sentence.Slice(a.start, a.end));
      const std::string ae = BuildHypothesis(HypothesisTask::kAe, prompts, span_text);
      oracle.Set(sentence.raw, ae, NliLabel::kEntailment);
      aspect_prompts.insert(ae);
      oracle.Add(sentence.raw, BuildHypothesis(HypothesisTask::kAsc, prompts, span_text),
                 casting::PolarityToNli(a.polarity));
    }
    for (const text::SpanCandidate& span : text::EnumerateSpans(sentence, max_span_len)) {
      const std::string ae = BuildHypothesis(HypothesisTask::kAe, prompts, span.text);
      if (aspect_prompts.count(ae) == 0) oracle.Add(sentence.raw, ae, NliLabel::kNeutral);
    }
  }
  return oracle;
}

OracleBackend OracleFromGoldFile(const std::filesystem::path& path,
                                 const casting::PromptConfig& prompts,
                                 size_t max_span_len, OracleBackend::Mode mode) {
  return OracleFromGold(eval::LoadGold(path), prompts, max_span_len, mode);
}

}  // namespace corn::backend
