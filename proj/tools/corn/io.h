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

#ifndef CORN_TOOLS_CORN_IO_H_
#define CORN_TOOLS_CORN_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corn/casting/predictor.h"
#include "corn/common/labels.h"
#include "corn/text/tokenizer.h"

namespace corn::cli {

// A sentence to run through a predictor. `aspects` are token ranges and
// are only needed for ASC.
struct InputSentence {
  text::TokenizedSentence sentence;
  std::vector<std::pair<size_t, size_t>> aspects;
};

// Reads prediction input. JSONL lines need "sentence_id" and "raw"; an
// optional "tokens" array replaces the built-in tokenizer, and optional
// "aspects" entries give either {"start","end"} or {"term"} (first
// occurrence). Gold files satisfy this schema. Lines not starting with '{'
// are plain sentences with ids "1", "2", ... by line number. Throws
// Error(kMalformedInput) or Error(kIoError) naming the path.
std::vector<InputSentence> LoadInputSentences(const std::filesystem::path& path);

struct PredictedSpan {
  size_t start = 0;
  size_t end = 0;
  double score = 0.0;
  std::string label;
};

// One line of prediction output:
//   {"sentence_id","task","tokens":[...],"labels":[...],
//    "spans":[{"start","end","score","label"}]}
// For ASC, labels hold one polarity per input aspect, aligned with spans.
struct PredictionRecord {
  std::string sentence_id;
  std::string task;
  std::vector<std::string> tokens;
  std::vector<std::string> labels;
  std::vector<PredictedSpan> spans;
};

std::string SerializePrediction(const PredictionRecord& record);
PredictionRecord ParsePrediction(std::string_view json_line);
std::vector<PredictionRecord> LoadPredictions(const std::filesystem::path& path);

PredictionRecord ToRecord(const InputSentence& input, const casting::AePrediction& p);
PredictionRecord ToRecord(const InputSentence& input, const casting::E2ePrediction& p);
PredictionRecord ToRecord(const InputSentence& input,
                          const std::vector<casting::AscPrediction>& p);

// Reads a whole file; Error(kIoError) naming the path when unreadable.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

}  // namespace corn::cli

#endif  // CORN_TOOLS_CORN_IO_H_
