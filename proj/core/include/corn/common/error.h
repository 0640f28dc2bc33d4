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

#ifndef CORN_COMMON_ERROR_H_
#define CORN_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace corn {

// Every failure raised by the library carries one of these codes so callers
// (notably the CLI) can map it to an exit status without string matching.
enum class ErrorCode {
  kInvalidArgument,
  kMalformedInput,
  kIoError,
  kEmptyCorpus,
  kMissingAnnotations,
  kAspectNotInClause,
  kPoolTooSmall,
  kNoViableCategory,
  kEmptyText,
  kOverlappingSpans,
  kBackendUnavailable,
  kMalformedResponse,
  kUnknownPair,
  kMalformedGold,
  kDegenerateBatch,
  kNonFinite,
  kLengthMismatch,
  kEmptyInput,
  kMalformedXml,
  kOffsetOutOfRange,
  kIdMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corn

#endif  // CORN_COMMON_ERROR_H_
