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

#include "corn/eval/gold.h"

#include <fstream>
#include <utility>

#include "corn/casting/label_mapping.h"
#include "corn/casting/overlap.h"
#include "corn/common/error.h"
#include "json.hpp"

namespace corn::eval {

text::TokenizedSentence GoldSentence::ToTokenized() const {
  return text::AlignTokens(raw, tokens, sentence_id);
}

std::vector<BioLabel> AspectsToBio(size_t n_tokens, std::span<const GoldAspect> aspects) {
  std::vector<std::pair<size_t, size_t>> ranges;
  for (const GoldAspect& a : aspects) ranges.emplace_back(a.start, a.end);
  return casting::RangesToBio(n_tokens, ranges);
}

std::vector<E2eLabel> AspectsToE2e(size_t n_tokens, std::span<const GoldAspect> aspects) {
  AspectsToBio(n_tokens, aspects);  // range and overlap checks
  std::vector<E2eLabel> labels(n_tokens, E2eLabel::kO);
  for (const GoldAspect& a : aspects) {
    for (size_t i = a.start; i < a.end; ++i) labels[i] = casting::PolarityToE2e(a.polarity);
  }
  return labels;
}

GoldSentence MakeGoldSentence(std::string sentence_id, std::string raw,
                              std::vector<std::string> tokens,
                              std::vector<GoldAspect> aspects) {
  GoldSentence gold{std::move(sentence_id), std::move(raw), std::move(tokens), {},
                    std::move(aspects), {}};
  gold.ae_labels = AspectsToBio(gold.tokens.size(), gold.aspects);
  gold.e2e_labels = AspectsToE2e(gold.tokens.size(), gold.aspects);
  return gold;
}

void ValidateGold(const GoldSentence& gold) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kMalformedGold, "sentence '" + gold.sentence_id + "': " + why);
  };
  const size_t n = gold.tokens.size();
  if (gold.ae_labels.size() != n) fail("ae_labels length differs from token count");
  if (gold.e2e_labels.size() != n) fail("e2e_labels length differs from token count");
  try {
    gold.ToTokenized();
    if (AspectsToBio(n, gold.aspects) != gold.ae_labels) {
      fail("ae_labels disagree with aspects");
    }
    if (AspectsToE2e(n, gold.aspects) != gold.e2e_labels) {
      fail("e2e_labels disagree with aspects");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedGold) throw;
    fail(e.what());
  }
}

std::string SerializeGold(const GoldSentence& gold) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["sentence_id"] = gold.sentence_id;
  doc["raw"] = gold.raw;
  doc["tokens"] = gold.tokens;
  ordered_json ae = ordered_json::array();
  for (BioLabel l : gold.ae_labels) ae.push_back(ToString(l));
  doc["ae_labels"] = std::move(ae);
  ordered_json aspects = ordered_json::array();
  for (const GoldAspect& a : gold.aspects) {
    aspects.push_back(ordered_json{{"start", a.start},
                                   {"end", a.end},
                                   {"polarity", ToString(a.polarity)},
                                   {"term", a.term}});
  }
  doc["aspects"] = std::move(aspects);
  ordered_json e2e = ordered_json::array();
  for (E2eLabel l : gold.e2e_labels) e2e.push_back(ToString(l));
  doc["e2e_labels"] = std::move(e2e);
  return doc.dump();
}

GoldSentence ParseGold(std::string_view json_line) {
  using nlohmann::json;
  GoldSentence gold;
  try {
    const json doc = json::parse(json_line);
    gold.sentence_id = doc.at("sentence_id").is_string()
                           ? doc["sentence_id"].get<std::string>()
                           : doc["sentence_id"].dump();
    gold.raw = doc.at("raw").get<std::string>();
    gold.tokens = doc.at("tokens").get<std::vector<std::string>>();
    for (const json& l : doc.at("ae_labels")) {
      gold.ae_labels.push_back(ParseBioLabel(l.get<std::string>()));
    }
    for (const json& a : doc.at("aspects")) {
      gold.aspects.push_back({a.at("start").get<size_t>(), a.at("end").get<size_t>(),
                              ParsePolarity(a.at("polarity").get<std::string>()),
                              a.value("term", std::string())});
    }
    for (const json& l : doc.at("e2e_labels")) {
      gold.e2e_labels.push_back(ParseE2eLabel(l.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedGold, std::string("gold line: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedGold, e.what());
  }
  ValidateGold(gold);
  return gold;
}

std::vector<GoldSentence> LoadGold(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  std::vector<GoldSentence> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ParseGold(line));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void WriteGold(const std::filesystem::path& path, std::span<const GoldSentence> gold) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  for (const GoldSentence& g : gold) out << SerializeGold(g) << '\n';
}

}  // namespace corn::eval
