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

#include "corn/curation/annotated_corpus.h"

#include <fstream>

#include "corn/common/error.h"
#include "corn/text/utf8.h"
#include "json.hpp"

namespace corn::curation {

PosTag ParsePosTag(std::string_view tag) {
  const std::string t(tag);
  if (t == "NOUN" || t == "PROPN" || t.rfind("NN", 0) == 0) return PosTag::kNoun;
  if (t == "ADJ" || t.rfind("JJ", 0) == 0) return PosTag::kAdj;
  if (t == "VERB" || t.rfind("VB", 0) == 0) return PosTag::kVerb;
  return PosTag::kOther;
}

AnnotatedSentence ParseAnnotatedSentence(std::string_view json_line) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("corpus line: ") + e.what());
  }
  auto require_string = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw Error(ErrorCode::kMalformedInput,
                  std::string("corpus line missing string field '") + key + "'");
    }
    return doc[key].get<std::string>();
  };
  const std::string id = doc.contains("sentence_id") && doc["sentence_id"].is_number()
                             ? doc["sentence_id"].dump()
                             : require_string("sentence_id");
  AnnotatedSentence out;
  out.category = require_string("category");
  const std::string raw = require_string("raw");
  if (!doc.contains("tokens") || !doc["tokens"].is_array()) {
    throw Error(ErrorCode::kMalformedInput, "sentence '" + id + "' has no token array");
  }

  std::vector<std::string> texts;
  for (const json& tok : doc["tokens"]) {
    if (!tok.is_object() || !tok.contains("text") || !tok["text"].is_string()) {
      throw Error(ErrorCode::kMalformedInput, "sentence '" + id + "' has a token without text");
    }
    texts.push_back(tok["text"].get<std::string>());
    AnnotatedToken ann;
    if (tok.contains("pos") && tok["pos"].is_string()) {
      ann.pos = ParsePosTag(tok["pos"].get<std::string>());
    }
    if (tok.contains("head") && tok["head"].is_number_integer()) {
      ann.head = tok["head"].get<int>();
    }
    if (tok.contains("dep") && tok["dep"].is_string()) {
      ann.dep_rel = text::AsciiLower(tok["dep"].get<std::string>());
    }
    out.annotations.push_back(std::move(ann));
  }
  out.sentence = text::AlignTokens(raw, texts, id);

  const int n = static_cast<int>(out.annotations.size());
  for (int i = 0; i < n; ++i) {
    const auto& head = out.annotations[i].head;
    if (head && (*head < -1 || *head >= n || *head == i)) {
      throw Error(ErrorCode::kMalformedInput,
                  "sentence '" + id + "' token " + std::to_string(i) +
                      " has invalid head " + std::to_string(*head));
    }
  }
  return out;
}

std::vector<AnnotatedSentence> LoadAnnotatedCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  std::vector<AnnotatedSentence> corpus;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::CollapseSpaces(line).empty()) continue;
    try {
      corpus.push_back(ParseAnnotatedSentence(line));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace corn::curation
