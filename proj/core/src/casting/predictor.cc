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

#include "corn/casting/predictor.h"

#include "corn/casting/label_mapping.h"
#include "corn/common/error.h"
#include "corn/text/spans.h"

namespace corn::casting {
namespace {

std::vector<backend::NliDistribution> Classify(const backend::NliBackend& backend,
                                               const std::vector<backend::NliQuery>& queries) {
  std::vector<backend::NliDistribution> out = backend.ClassifyBatch(queries);
  if (out.size() != queries.size()) {
    throw Error(ErrorCode::kMalformedResponse,
                backend.Name() + " returned " + std::to_string(out.size()) +
                    " predictions for " + std::to_string(queries.size()) + " queries");
  }
  for (const auto& d : out) backend::ValidateDistribution(d);
  return out;
}

}  // namespace

AscPrediction PredictAsc(const text::TokenizedSentence& sentence,
                         std::string_view aspect, const PromptConfig& prompts,
                         const backend::NliBackend& backend) {
  AscPrediction prediction;
  prediction.hypothesis = BuildHypothesis(HypothesisTask::kAsc, prompts, aspect);
  prediction.distribution =
      Classify(backend, {{sentence.raw, prediction.hypothesis}}).front();
  prediction.label = MapNliToAsc(prediction.distribution.Argmax());
  return prediction;
}

AePrediction PredictAe(const text::TokenizedSentence& sentence,
                       const PromptConfig& prompts,
                       const backend::NliBackend& backend,
                       const AeOptions& options) {
  AePrediction prediction;
  std::vector<text::SpanCandidate> spans =
      text::EnumerateSpans(sentence, options.max_span_len);
  if (options.drop_delimited_edges) {
    spans = text::DropDelimitedEdges(sentence, std::move(spans), options.delimiters);
  }
  prediction.candidates = spans.size();
  if (spans.empty()) {
    prediction.labels.assign(sentence.size(), BioLabel::kO);
    return prediction;
  }

  std::vector<backend::NliQuery> queries;
  queries.reserve(spans.size());
  for (const auto& span : spans) {
    queries.push_back({sentence.raw, BuildHypothesis(HypothesisTask::kAe, prompts, span.text)});
  }
  const auto distributions = Classify(backend, queries);

  std::vector<ScoredSpan> aspects;
  for (size_t i = 0; i < spans.size(); ++i) {
    const backend::NliDistribution& d = distributions[i];
    const bool is_aspect = options.entail_threshold
                               ? d.entailment >= *options.entail_threshold
                               : MapNliToAe(d.Argmax()) == AeLabel::kAspect;
    if (is_aspect) {
      aspects.push_back({std::move(spans[i]), d.entailment, d,
                         std::move(queries[i].hypothesis)});
    }
  }
  prediction.kept = ResolveOverlaps(std::move(aspects));
  prediction.labels = SpansToBio(sentence.size(), prediction.kept);
  return prediction;
}

E2ePrediction PredictE2e(const text::TokenizedSentence& sentence,
                         const PromptConfig& prompts,
                         const backend::NliBackend& backend,
                         const AeOptions& options) {
  E2ePrediction prediction;
  prediction.ae = PredictAe(sentence, prompts, backend, options);
  prediction.labels.assign(sentence.size(), E2eLabel::kO);
  if (prediction.ae.kept.empty()) return prediction;

  std::vector<backend::NliQuery> queries;
  for (const ScoredSpan& s : prediction.ae.kept) {
    queries.push_back(
        {sentence.raw, BuildHypothesis(HypothesisTask::kAsc, prompts, s.span.text)});
  }
  const auto distributions = Classify(backend, queries);
  for (size_t i = 0; i < queries.size(); ++i) {
    const ScoredSpan& s = prediction.ae.kept[i];
    const E2eLabel label = MapNliToE2e(distributions[i].Argmax());
    for (size_t t = s.span.start; t < s.span.end; ++t) prediction.labels[t] = label;
    prediction.spans.push_back({s, label, distributions[i], std::move(queries[i].hypothesis)});
  }
  return prediction;
}

}  // namespace corn::casting
