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

#ifndef CORN_TEXT_TOKENIZER_H_
#define CORN_TEXT_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace corn::text {

// A token with offsets into the raw sentence. char_* count Unicode code
// points; byte_* index the UTF-8 string.
struct Token {
  std::string text;
  size_t index = 0;
  size_t char_start = 0;
  size_t char_end = 0;
  size_t byte_start = 0;
  size_t byte_end = 0;
};

struct TokenizedSentence {
  std::string sentence_id;
  std::string raw;
  std::vector<Token> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  // Raw text covering tokens [start, end), original spacing preserved.
  std::string_view Slice(size_t start, size_t end) const;
};

// Splits on Unicode whitespace and detaches every punctuation character as
// its own token. Whitespace-only input yields zero tokens.
TokenizedSentence Tokenize(std::string_view raw, std::string sentence_id = {});

// Rebuilds raw text from token texts and the recorded inter-token gaps.
std::string Reconstruct(const TokenizedSentence& sentence);

// Builds a sentence from an externally produced token list by locating each
// token, in order, in `raw`. Throws Error(kMalformedInput) when a token
// cannot be found.
TokenizedSentence AlignTokens(std::string_view raw,
                              const std::vector<std::string>& token_texts,
                              std::string sentence_id = {});

// True when every code point of the token is punctuation.
bool IsPunctuationToken(std::string_view token);

}  // namespace corn::text

#endif  // CORN_TEXT_TOKENIZER_H_
