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

#include "corn/io.h"

#include <fstream>
#include <sstream>

#include "corn/common/error.h"
#include "corn/text/match.h"
#include "json.hpp"

namespace corn::cli {
namespace {

using nlohmann::json;

std::vector<std::string> Lines(const std::filesystem::path& path) {
  std::istringstream in(ReadFile(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

bool Blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

InputSentence ParseInputLine(const std::string& line) {
  const json doc = json::parse(line);
  InputSentence in;
  const std::string id = doc.at("sentence_id").get<std::string>();
  const std::string raw = doc.at("raw").get<std::string>();
  if (doc.contains("tokens")) {
    in.sentence = text::AlignTokens(raw, doc["tokens"].get<std::vector<std::string>>(), id);
  } else {
    in.sentence = text::Tokenize(raw, id);
  }
  if (doc.contains("aspects")) {
    for (const json& a : doc["aspects"]) {
      if (a.contains("start")) {
        const size_t start = a.at("start").get<size_t>();
        const size_t end = a.at("end").get<size_t>();
        if (start >= end || end > in.sentence.size()) {
          throw Error(ErrorCode::kMalformedInput,
                      "sentence " + id + ": aspect range out of bounds");
        }
        in.aspects.emplace_back(start, end);
      } else {
        const std::string term = a.at("term").get<std::string>();
        const auto hits = text::FindTermOccurrences(in.sentence, term);
        if (hits.empty()) {
          throw Error(ErrorCode::kMalformedInput,
                      "sentence " + id + ": aspect '" + term + "' not found");
        }
        in.aspects.push_back(hits.front());
      }
    }
  }
  return in;
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::vector<InputSentence> LoadInputSentences(const std::filesystem::path& path) {
  std::vector<InputSentence> out;
  const auto lines = Lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (Blank(line)) continue;
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    if (line.find_first_not_of(" \t") != line.find('{')) {
      out.push_back({text::Tokenize(line, std::to_string(i + 1)), {}});
      continue;
    }
    try {
      out.push_back(ParseInputLine(line));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  return out;
}

std::string SerializePrediction(const PredictionRecord& r) {
  nlohmann::ordered_json spans = nlohmann::ordered_json::array();
  for (const PredictedSpan& s : r.spans) {
    spans.push_back({{"start", s.start}, {"end", s.end}, {"score", s.score},
                     {"label", s.label}});
  }
  nlohmann::ordered_json doc;
  doc["sentence_id"] = r.sentence_id;
  doc["task"] = r.task;
  doc["tokens"] = r.tokens;
  doc["labels"] = r.labels;
  doc["spans"] = std::move(spans);
  return doc.dump();
}

PredictionRecord ParsePrediction(std::string_view json_line) {
  try {
    const json doc = json::parse(json_line);
    PredictionRecord r;
    r.sentence_id = doc.at("sentence_id").get<std::string>();
    r.task = doc.at("task").get<std::string>();
    r.tokens = doc.value("tokens", std::vector<std::string>{});
    r.labels = doc.at("labels").get<std::vector<std::string>>();
    for (const json& s : doc.value("spans", json::array())) {
      r.spans.push_back({s.at("start").get<size_t>(), s.at("end").get<size_t>(),
                         s.value("score", 0.0), s.at("label").get<std::string>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("prediction record: ") + e.what());
  }
}

std::vector<PredictionRecord> LoadPredictions(const std::filesystem::path& path) {
  std::vector<PredictionRecord> out;
  const auto lines = Lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Blank(lines[i])) continue;
    try {
      out.push_back(ParsePrediction(lines[i]));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

namespace {

PredictionRecord Base(const InputSentence& input, const char* task) {
  PredictionRecord r;
  r.sentence_id = input.sentence.sentence_id;
  r.task = task;
  for (const text::Token& t : input.sentence.tokens) r.tokens.push_back(t.text);
  return r;
}

}  // namespace

PredictionRecord ToRecord(const InputSentence& input, const casting::AePrediction& p) {
  PredictionRecord r = Base(input, "ae");
  for (BioLabel l : p.labels) r.labels.emplace_back(ToString(l));
  for (const casting::ScoredSpan& s : p.kept) {
    r.spans.push_back({s.span.start, s.span.end, s.entail_score, "T"});
  }
  return r;
}

PredictionRecord ToRecord(const InputSentence& input, const casting::E2ePrediction& p) {
  PredictionRecord r = Base(input, "e2e");
  for (E2eLabel l : p.labels) r.labels.emplace_back(ToString(l));
  for (const casting::E2eSpan& s : p.spans) {
    const NliLabel nli = s.polarity_distribution.Argmax();
    r.spans.push_back({s.span.span.start, s.span.span.end, s.polarity_distribution[nli],
                       std::string(ToString(s.label))});
  }
  return r;
}

PredictionRecord ToRecord(const InputSentence& input,
                          const std::vector<casting::AscPrediction>& p) {
  PredictionRecord r = Base(input, "asc");
  for (size_t i = 0; i < p.size(); ++i) {
    const std::string label(ToString(p[i].label));
    r.labels.push_back(label);
    r.spans.push_back({input.aspects[i].first, input.aspects[i].second,
                       p[i].distribution[p[i].distribution.Argmax()], label});
  }
  return r;
}

}  // namespace corn::cli
