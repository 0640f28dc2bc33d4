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

#ifndef CORN_CASTING_PROMPT_H_
#define CORN_CASTING_PROMPT_H_

#include <optional>
#include <string>
#include <string_view>

namespace corn::casting {

// Hypothesis templates. The AE template takes {domain} and {span}, the ASC
// (and E2E step 2) template takes {aspect}.
struct PromptConfig {
  std::string domain_label = "The product";
  std::string ae_template = "{domain} has {span}.";
  std::string asc_template = "{aspect} is great.";

  // Each template must hold exactly its placeholders, once each.
  // Throws Error(kInvalidArgument).
  void Validate() const;
};

enum class HypothesisTask { kAe, kAsc };

// Substitutes `text` (verbatim, no recasing) into the task's template. The
// result has single spaces and exactly one terminal period. Empty text is
// Error(kEmptyText).
std::string BuildHypothesis(HypothesisTask task, const PromptConfig& config,
                            std::string_view text);

// Inverse of BuildHypothesis: the slot text if `hypothesis` is an instance of
// the task's template, nullopt otherwise.
std::optional<std::string> MatchHypothesis(HypothesisTask task,
                                           const PromptConfig& config,
                                           std::string_view hypothesis);

}  // namespace corn::casting

#endif  // CORN_CASTING_PROMPT_H_
