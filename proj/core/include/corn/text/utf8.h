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

#ifndef CORN_TEXT_UTF8_H_
#define CORN_TEXT_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace corn::text {

struct CodePoint {
  char32_t value;
  size_t byte_offset;
  size_t byte_length;
};

// Decodes UTF-8. Invalid sequences decode as U+FFFD covering one byte, so
// byte offsets always tile the input.
std::vector<CodePoint> DecodeUtf8(std::string_view text);

bool IsSpace(char32_t c);
bool IsPunctuation(char32_t c);

// ASCII-only lowercasing; non-ASCII bytes are copied unchanged.
std::string AsciiLower(std::string_view text);

// Collapses runs of ASCII whitespace to one space and trims both ends.
std::string CollapseSpaces(std::string_view text);

}  // namespace corn::text

#endif  // CORN_TEXT_UTF8_H_
