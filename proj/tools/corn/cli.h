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

#ifndef CORN_TOOLS_CORN_CLI_H_
#define CORN_TOOLS_CORN_CLI_H_

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "corn/backend/backend.h"
#include "corn/casting/prompt.h"
#include "corn/common/error.h"

namespace corn::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // unexpected errors, failed checks
inline constexpr int kExitBadInput = 2;      // usage, schema, missing files, id mismatch
inline constexpr int kExitNoViable = 3;      // curation produced nothing
inline constexpr int kExitBackendDown = 4;   // NLI backend unreachable or broken

int ExitCodeFor(ErrorCode code);

struct BackendFlags {
  std::string spec;  // oracle:PATH | http:URL | rule | stub
  size_t batch_size = 32;
  size_t max_span_len = 6;
  bool oracle_strict = false;
  bool negation = false;
  std::string positive_lexicon;
  std::string negative_lexicon;
  std::string known_aspects;
};

// Throws Error(kInvalidArgument) for an unknown spec and the loaders'
// errors for missing files.
std::shared_ptr<const backend::NliBackend> MakeBackend(const BackendFlags& flags,
                                                       const casting::PromptConfig& prompts);

// Runs `corn` with args excluding the program name. Results go to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corn::cli

#endif  // CORN_TOOLS_CORN_CLI_H_
