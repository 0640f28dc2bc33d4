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

#include "corn/curation/lexicon.h"

#include <fstream>
#include <sstream>

#include "corn/common/error.h"
#include "corn/text/match.h"
#include "corn/text/utf8.h"
#include "json.hpp"

namespace corn::curation {

std::optional<Polarity> OpinionLexicon::Lookup(std::string_view term) const {
  if (positive.find(term) != positive.end()) return Polarity::kPos;
  if (negative.find(term) != negative.end()) return Polarity::kNeg;
  return std::nullopt;
}

OpinionLexicon MakeLexicon(const TermSet& positive, const TermSet& negative,
                           size_t* ambiguous) {
  OpinionLexicon lexicon;
  for (const auto& t : positive) lexicon.positive.insert(text::AsciiLower(t));
  for (const auto& t : negative) lexicon.negative.insert(text::AsciiLower(t));
  size_t removed = 0;
  for (auto it = lexicon.positive.begin(); it != lexicon.positive.end();) {
    if (lexicon.negative.erase(*it) > 0) {
      it = lexicon.positive.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  if (ambiguous != nullptr) *ambiguous = removed;
  return lexicon;
}

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TermSet LoadTermList(const std::filesystem::path& path) {
  std::istringstream in(ReadFile(path));
  TermSet terms;
  std::string line;
  while (std::getline(in, line)) {
    const std::string term = text::CollapseSpaces(line);
    if (term.empty() || term[0] == '#' || term[0] == ';') continue;
    terms.insert(text::AsciiLower(term));
  }
  return terms;
}

OpinionLexicon LoadOpinionLexicon(const std::filesystem::path& positive,
                                  const std::filesystem::path& negative,
                                  size_t* ambiguous) {
  return MakeLexicon(LoadTermList(positive), LoadTermList(negative), ambiguous);
}

SeedAspectMap ParseSeedAspects(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("seed aspects: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedInput, "seed aspects must be a JSON object");
  }
  SeedAspectMap seeds;
  for (const auto& [category, terms] : doc.items()) {
    if (!terms.is_array()) {
      throw Error(ErrorCode::kMalformedInput,
                  "seed aspects for '" + category + "' must be an array");
    }
    SeedAspectSet set{category, {}};
    for (const auto& term : terms) {
      if (!term.is_string()) {
        throw Error(ErrorCode::kMalformedInput,
                    "non-string seed aspect in '" + category + "'");
      }
      std::string normalized = text::NormalizeTerm(term.get<std::string>());
      if (normalized.empty()) {
        throw Error(ErrorCode::kMalformedInput,
                    "empty seed aspect in '" + category + "'");
      }
      set.aspects.insert(std::move(normalized));
    }
    seeds.emplace(category, std::move(set));
  }
  return seeds;
}

SeedAspectMap LoadSeedAspects(const std::filesystem::path& path) {
  return ParseSeedAspects(ReadFile(path));
}

}  // namespace corn::curation
