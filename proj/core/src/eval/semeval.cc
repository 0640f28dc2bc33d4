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

#include "corn/eval/semeval.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "corn/common/error.h"
#include "corn/text/tokenizer.h"
#include "corn/text/utf8.h"
#include "json.hpp"

namespace corn::eval {
namespace {

namespace pt = boost::property_tree;

struct RawTerm {
  std::string polarity;
  std::string term;
  long from = 0;
  long to = 0;
  bool null_target = false;
};

std::optional<std::string> Attr(const pt::ptree& node, const char* name) {
  auto v = node.get_optional<std::string>(std::string("<xmlattr>.") + name);
  if (!v) return std::nullopt;
  return *v;
}

long ParseOffset(const std::string& text, const std::string& where) {
  try {
    size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kMalformedXml, where + ": bad offset '" + text + "'");
  }
}

std::vector<RawTerm> CollectTerms(const pt::ptree& sentence, const std::string& id) {
  std::vector<RawTerm> terms;
  auto read = [&](const pt::ptree& node, const char* term_attr) {
    RawTerm t;
    t.term = Attr(node, term_attr).value_or("");
    t.polarity = Attr(node, "polarity").value_or("");
    const auto from = Attr(node, "from");
    const auto to = Attr(node, "to");
    if (t.term == "NULL" || !from || !to) {
      t.null_target = true;
    } else {
      t.from = ParseOffset(*from, "sentence " + id);
      t.to = ParseOffset(*to, "sentence " + id);
      if (t.from == 0 && t.to == 0) t.null_target = true;
    }
    terms.push_back(std::move(t));
  };
  if (auto group = sentence.get_child_optional("aspectTerms")) {
    for (const auto& [name, node] : *group) {
      if (name == "aspectTerm") read(node, "term");
    }
  }
  if (auto group = sentence.get_child_optional("Opinions")) {
    for (const auto& [name, node] : *group) {
      if (name == "Opinion") read(node, "target");
    }
  }
  return terms;
}

void ConvertSentence(const pt::ptree& node, SemEvalConversion& out) {
  const auto id = Attr(node, "id");
  const auto text = node.get_optional<std::string>("text");
  if (!id || !text) throw Error(ErrorCode::kMalformedXml, "sentence without id or text");
  ConversionReport& report = out.report;

  const text::TokenizedSentence sentence = text::Tokenize(*text, *id);
  const long n_chars = static_cast<long>(text::DecodeUtf8(*text).size());

  std::vector<GoldAspect> kept;
  for (const RawTerm& t : CollectTerms(node, *id)) {
    if (t.null_target) {
      ++report.null_targets;
      continue;
    }
    if (t.polarity == "conflict") {
      ++report.conflict_dropped;
      continue;
    }
    const Polarity polarity = [&] {
      try {
        return ParsePolarity(t.polarity);
      } catch (const Error&) {
        throw Error(ErrorCode::kMalformedXml,
                    "sentence " + *id + ": unknown polarity '" + t.polarity + "'");
      }
    }();
    if (t.from < 0 || t.to <= t.from || t.to > n_chars) {
      throw Error(ErrorCode::kOffsetOutOfRange,
                  "sentence " + *id + ": offsets [" + std::to_string(t.from) + ", " +
                      std::to_string(t.to) + ") outside text of length " +
                      std::to_string(n_chars));
    }
    size_t first = sentence.size();
    size_t last = 0;
    for (const text::Token& tok : sentence.tokens) {
      if (static_cast<long>(tok.char_end) > t.from &&
          static_cast<long>(tok.char_start) < t.to) {
        first = std::min(first, tok.index);
        last = std::max(last, tok.index + 1);
      }
    }
    if (first >= last) {
      throw Error(ErrorCode::kOffsetOutOfRange,
                  "sentence " + *id + ": term '" + t.term + "' covers no token");
    }
    if (static_cast<long>(sentence.tokens[first].char_start) != t.from ||
        static_cast<long>(sentence.tokens[last - 1].char_end) != t.to) {
      ++report.snapped;
      report.warnings.push_back("sentence " + *id + ": term '" + t.term +
                                "' snapped to token boundaries");
    }
    GoldAspect aspect{first, last, polarity,
                      std::string(sentence.Slice(first, last))};
    bool drop = false;
    for (const GoldAspect& k : kept) {
      if (k.start == first && k.end == last) {
        ++report.duplicates_dropped;
        drop = true;
        break;
      }
      if (k.start < last && first < k.end) {
        ++report.overlaps_dropped;
        report.warnings.push_back("sentence " + *id + ": term '" + t.term +
                                  "' overlaps an earlier term and was dropped");
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(std::move(aspect));
  }
  std::sort(kept.begin(), kept.end(),
            [](const GoldAspect& a, const GoldAspect& b) { return a.start < b.start; });
  for (const GoldAspect& a : kept) {
    ++report.aspects;
    switch (a.polarity) {
      case Polarity::kPos: ++report.positive; break;
      case Polarity::kNeu: ++report.neutral; break;
      case Polarity::kNeg: ++report.negative; break;
    }
  }

  std::vector<std::string> tokens;
  for (const text::Token& tok : sentence.tokens) tokens.push_back(tok.text);
  GoldSentence gold = MakeGoldSentence(*id, *text, std::move(tokens), std::move(kept));
  for (BioLabel l : gold.ae_labels) {
    ++(l == BioLabel::kO ? report.outside_tokens : report.aspect_tokens);
  }
  ++report.sentences;
  out.sentences.push_back(std::move(gold));
}

void Walk(const pt::ptree& tree, SemEvalConversion& out) {
  for (const auto& [name, child] : tree) {
    if (name == "sentence") {
      ConvertSentence(child, out);
    } else if (name != "<xmlattr>" && name != "<xmlcomment>") {
      Walk(child, out);
    }
  }
}

}  // namespace

SemEvalConversion ConvertSemEval(std::string_view xml) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedXml, e.what());
  }
  SemEvalConversion out;
  Walk(tree, out);
  return out;
}

SemEvalConversion ConvertSemEvalFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ConvertSemEval(buf.str());
}

std::string ConversionReportToJson(const ConversionReport& r) {
  nlohmann::ordered_json doc = {
      {"sentences", r.sentences},
      {"aspects", r.aspects},
      {"polarity", {{"POS", r.positive}, {"NEU", r.neutral}, {"NEG", r.negative}}},
      {"conflict_dropped", r.conflict_dropped},
      {"null_targets", r.null_targets},
      {"duplicates_dropped", r.duplicates_dropped},
      {"overlaps_dropped", r.overlaps_dropped},
      {"snapped", r.snapped},
      {"aspect_tokens", r.aspect_tokens},
      {"outside_tokens", r.outside_tokens},
      {"warnings", r.warnings}};
  return doc.dump(2);
}

}  // namespace corn::eval
