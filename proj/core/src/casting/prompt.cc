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

#include "corn/casting/prompt.h"

#include <vector>

#include "corn/common/error.h"
#include "corn/text/utf8.h"

namespace corn::casting {
namespace {

size_t CountOf(std::string_view haystack, std::string_view needle) {
  size_t count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

void CheckTemplate(std::string_view name, std::string_view tmpl,
                   const std::vector<std::string_view>& placeholders) {
  size_t expected = 0;
  for (std::string_view p : placeholders) {
    if (CountOf(tmpl, p) != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " template must contain " + std::string(p) +
                      " exactly once: '" + std::string(tmpl) + "'");
    }
    ++expected;
  }
  if (CountOf(tmpl, "{") != expected || CountOf(tmpl, "}") != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " template has unknown placeholders: '" +
                    std::string(tmpl) + "'");
  }
}

void ReplaceOnce(std::string& s, std::string_view from, std::string_view to) {
  const size_t pos = s.find(from);
  if (pos != std::string::npos) s.replace(pos, from.size(), to);
}

// Single spaces, no space before the final period, exactly one period.
std::string Finish(std::string s) {
  s = text::CollapseSpaces(s);
  while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
  s.push_back('.');
  return s;
}

std::string Render(HypothesisTask task, const PromptConfig& config,
                   std::string_view slot) {
  std::string out;
  if (task == HypothesisTask::kAe) {
    out = config.ae_template;
    ReplaceOnce(out, "{domain}", config.domain_label);
    ReplaceOnce(out, "{span}", slot);
  } else {
    out = config.asc_template;
    ReplaceOnce(out, "{aspect}", slot);
  }
  return out;
}

}  // namespace

void PromptConfig::Validate() const {
  CheckTemplate("AE", ae_template, {"{domain}", "{span}"});
  CheckTemplate("ASC", asc_template, {"{aspect}"});
}

std::string BuildHypothesis(HypothesisTask task, const PromptConfig& config,
                            std::string_view text) {
  const std::string slot = text::CollapseSpaces(text);
  if (slot.empty()) throw Error(ErrorCode::kEmptyText, "hypothesis slot text is empty");
  return Finish(Render(task, config, slot));
}

std::optional<std::string> MatchHypothesis(HypothesisTask task,
                                           const PromptConfig& config,
                                           std::string_view hypothesis) {
  constexpr std::string_view kSentinel = "\x01";
  const std::string frame = Finish(Render(task, config, kSentinel));
  const size_t cut = frame.find(kSentinel);
  if (cut == std::string::npos) return std::nullopt;
  const std::string_view prefix = std::string_view(frame).substr(0, cut);
  const std::string_view suffix = std::string_view(frame).substr(cut + 1);
  if (hypothesis.size() <= prefix.size() + suffix.size() ||
      hypothesis.substr(0, prefix.size()) != prefix ||
      hypothesis.substr(hypothesis.size() - suffix.size()) != suffix) {
    return std::nullopt;
  }
  return std::string(hypothesis.substr(
      prefix.size(), hypothesis.size() - prefix.size() - suffix.size()));
}

}  // namespace corn::casting
