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

#ifndef CORN_BACKEND_ORACLE_H_
#define CORN_BACKEND_ORACLE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "corn/backend/backend.h"
#include "corn/casting/prompt.h"
#include "corn/eval/gold.h"
#include "corn/text/spans.h"

namespace corn::backend {

// Answers from a (premise, hypothesis) -> label table with one-hot
// distributions. Pairs missing from the table are Error(kUnknownPair) in
// strict mode and neutral in lenient mode.
class OracleBackend : public NliBackend {
 public:
  enum class Mode { kStrict, kLenient };

  explicit OracleBackend(Mode mode = Mode::kLenient) : mode_(mode) {}

  // Returns false (and keeps the existing entry) when the pair is already
  // present with a different label.
  bool Add(const std::string& premise, const std::string& hypothesis, NliLabel label);
  void Set(const std::string& premise, const std::string& hypothesis, NliLabel label);

  std::optional<NliLabel> Find(const std::string& premise,
                               const std::string& hypothesis) const;

  std::vector<NliDistribution> ClassifyBatch(
      std::span<const NliQuery> queries) const override;
  std::string Name() const override { return "oracle"; }

  size_t size() const { return table_.size(); }
  Mode mode() const { return mode_; }
  // Add() calls rejected because of a conflicting label.
  size_t conflicts() const { return conflicts_; }

 private:
  Mode mode_;
  std::map<std::pair<std::string, std::string>, NliLabel> table_;
  size_t conflicts_ = 0;
};

// Lookup table that reproduces gold annotations through the NLI casting:
// AE prompts of gold aspect spans -> entailment, AE prompts of every other
// candidate span up to max_span_len -> neutral, ASC prompts of gold aspects
// -> the polarity's NLI label (POS -> entailment, NEU -> neutral,
// NEG -> contradiction). When the same prompt text means both aspect and
// non-aspect in one sentence the aspect reading wins.
//
// Throws Error(kMalformedGold) for inconsistent gold input.
OracleBackend OracleFromGold(std::span<const eval::GoldSentence> gold,
                             const casting::PromptConfig& prompts,
                             size_t max_span_len = text::kDefaultMaxSpanLength,
                             OracleBackend::Mode mode = OracleBackend::Mode::kLenient);

OracleBackend OracleFromGoldFile(const std::filesystem::path& path,
                                 const casting::PromptConfig& prompts,
                                 size_t max_span_len = text::kDefaultMaxSpanLength,
                                 OracleBackend::Mode mode = OracleBackend::Mode::kLenient);

}  // namespace corn::backend

#endif  // CORN_BACKEND_ORACLE_H_
