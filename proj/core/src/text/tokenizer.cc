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

#include "corn/text/tokenizer.h"

#include "corn/common/error.h"
#include "corn/text/utf8.h"

namespace corn::text {

std::string_view TokenizedSentence::Slice(size_t start, size_t end) const {
  if (start >= end || end > tokens.size()) return {};
  const size_t begin = tokens[start].byte_start;
  return std::string_view(raw).substr(begin, tokens[end - 1].byte_end - begin);
}

namespace {

void Push(TokenizedSentence& sentence, const std::vector<CodePoint>& cps,
          size_t first, size_t last) {
  Token token;
  token.index = sentence.tokens.size();
  token.char_start = first;
  token.char_end = last;
  token.byte_start = cps[first].byte_offset;
  token.byte_end = cps[last - 1].byte_offset + cps[last - 1].byte_length;
  token.text = sentence.raw.substr(token.byte_start,
                                   token.byte_end - token.byte_start);
  sentence.tokens.push_back(std::move(token));
}

}  // namespace

TokenizedSentence Tokenize(std::string_view raw, std::string sentence_id) {
  TokenizedSentence sentence;
  sentence.sentence_id = std::move(sentence_id);
  sentence.raw = std::string(raw);
  const std::vector<CodePoint> cps = DecodeUtf8(sentence.raw);

  size_t word_start = 0;
  bool in_word = false;
  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i].value;
    if (IsSpace(c)) {
      if (in_word) Push(sentence, cps, word_start, i);
      in_word = false;
    } else if (IsPunctuation(c)) {
      if (in_word) Push(sentence, cps, word_start, i);
      in_word = false;
      Push(sentence, cps, i, i + 1);
    } else if (!in_word) {
      in_word = true;
      word_start = i;
    }
  }
  if (in_word) Push(sentence, cps, word_start, cps.size());
  return sentence;
}

std::string Reconstruct(const TokenizedSentence& sentence) {
  std::string out;
  out.reserve(sentence.raw.size());
  size_t cursor = 0;
  for (const Token& token : sentence.tokens) {
    out.append(sentence.raw, cursor, token.byte_start - cursor);
    out.append(token.text);
    cursor = token.byte_end;
  }
  out.append(sentence.raw, cursor, std::string::npos);
  return out;
}

TokenizedSentence AlignTokens(std::string_view raw,
                              const std::vector<std::string>& token_texts,
                              std::string sentence_id) {
  TokenizedSentence sentence;
  sentence.sentence_id = std::move(sentence_id);
  sentence.raw = std::string(raw);

  // Byte offset -> code point index, for char offsets.
  const std::vector<CodePoint> cps = DecodeUtf8(sentence.raw);
  std::vector<size_t> char_at(sentence.raw.size() + 1, 0);
  for (size_t i = 0; i < cps.size(); ++i) {
    for (size_t b = 0; b < cps[i].byte_length; ++b) {
      char_at[cps[i].byte_offset + b] = i;
    }
  }
  char_at[sentence.raw.size()] = cps.size();

  size_t cursor = 0;
  for (const std::string& text : token_texts) {
    if (text.empty()) {
      throw Error(ErrorCode::kMalformedInput,
                  "empty token in sentence '" + sentence.sentence_id + "'");
    }
    const size_t pos = sentence.raw.find(text, cursor);
    if (pos == std::string::npos) {
      throw Error(ErrorCode::kMalformedInput,
                  "token '" + text + "' not found in raw text of sentence '" +
                      sentence.sentence_id + "'");
    }
    Token token;
    token.text = text;
    token.index = sentence.tokens.size();
    token.byte_start = pos;
    token.byte_end = pos + text.size();
    token.char_start = char_at[token.byte_start];
    token.char_end = char_at[token.byte_end];
    sentence.tokens.push_back(std::move(token));
    cursor = pos + text.size();
  }
  return sentence;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  for (const CodePoint& cp : DecodeUtf8(token)) {
    if (!IsPunctuation(cp.value)) return false;
  }
  return true;
}

}  // namespace corn::text
